#include "thoth/rdf/stream.hpp"

namespace thoth::rdf {

void SemanticStream::append(TimedTriple element) {
    if (element.timestamp < 0)
        throw std::invalid_argument("stream timestamps must be >= 0");
    if (!elements_.empty() && element.timestamp < elements_.back().timestamp)
        throw std::invalid_argument("stream timestamps must be non-decreasing");
    require_data_triple(element.triple);
    elements_.push_back(std::move(element));
}

std::vector<TimedTriple> window(const SemanticStream& stream, Tick now, Tick width) {
    if (width <= 0)
        throw std::invalid_argument("window width must be > 0");
    std::vector<TimedTriple> out;
    for (const TimedTriple& e : stream.elements()) {
        if (e.timestamp > now) break; // elements are time-ordered
        if (e.timestamp > now - width) out.push_back(e);
    }
    return out;
}

} // namespace thoth::rdf
