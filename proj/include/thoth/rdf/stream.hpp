#ifndef THOTH_RDF_STREAM_HPP
#define THOTH_RDF_STREAM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "thoth/rdf/graph.hpp"
#include "thoth/rdf/term.hpp"

namespace thoth::rdf {

using Tick = std::int64_t;

/// One element of a semantic stream: a ground triple plus its timestamp
/// in integer ticks.
struct TimedTriple {
    Triple triple;
    Tick timestamp = 0;

    int compare(const TimedTriple& other) const {
        if (timestamp != other.timestamp) return timestamp < other.timestamp ? -1 : 1;
        return triple.compare(other.triple);
    }
    friend bool operator==(const TimedTriple& a, const TimedTriple& b) { return a.compare(b) == 0; }
    friend bool operator<(const TimedTriple& a, const TimedTriple& b) { return a.compare(b) < 0; }
};

/// An append-only timestamped sequence of RDF-star triples, plus a
/// metadata graph describing provenance (e.g. the generating sensor).
class SemanticStream {
public:
    SemanticStream() = default;
    explicit SemanticStream(Term uri) : uri_(std::move(uri)) {}

    const Term& uri() const { return uri_; }
    const std::vector<TimedTriple>& elements() const { return elements_; }
    KnowledgeGraph& metadata() { return metadata_; }
    const KnowledgeGraph& metadata() const { return metadata_; }

    /// Appends an element. Throws std::invalid_argument on a negative
    /// timestamp, a timestamp below the last element's, or a non-data triple.
    void append(TimedTriple element);
    void append(Triple t, Tick at) { append(TimedTriple{std::move(t), at}); }

    Tick last_timestamp() const { return elements_.empty() ? -1 : elements_.back().timestamp; }

private:
    Term uri_;
    std::vector<TimedTriple> elements_;
    KnowledgeGraph metadata_;
};

/// Elements of `stream` with timestamp in the half-open interval
/// (now - width, now]. Pure; throws std::invalid_argument when width <= 0.
std::vector<TimedTriple> window(const SemanticStream& stream, Tick now, Tick width);

} // namespace thoth::rdf

#endif
