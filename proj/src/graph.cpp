#include "thoth/rdf/graph.hpp"

#include <algorithm>

#include "thoth/rdf/writer.hpp"

namespace thoth::rdf {

bool match_term(const Term& pattern, const Term& data, Binding& binding) {
    if (pattern.is_variable()) {
        auto it = binding.find(pattern.text());
        if (it == binding.end()) {
            binding.emplace(pattern.text(), data);
            return true;
        }
        return it->second == data;
    }
    if (pattern.is_quoted()) {
        if (!data.is_quoted()) return false;
        const Triple& pq = pattern.quoted_triple();
        const Triple& dq = data.quoted_triple();
        return match_term(pq.s, dq.s, binding) && match_term(pq.p, dq.p, binding) &&
               match_term(pq.o, dq.o, binding);
    }
    return pattern == data;
}

Term substitute(const Term& pattern, const Binding& binding) {
    if (pattern.is_variable()) {
        auto it = binding.find(pattern.text());
        return it == binding.end() ? pattern : it->second;
    }
    if (pattern.is_quoted()) {
        const Triple& q = pattern.quoted_triple();
        return Term::quoted(substitute(q, binding));
    }
    return pattern;
}

Triple substitute(const Triple& pattern, const Binding& binding) {
    return Triple{substitute(pattern.s, binding), substitute(pattern.p, binding),
                  substitute(pattern.o, binding)};
}

bool KnowledgeGraph::insert(Triple t) {
    require_data_triple(t);
    return triples_.insert(std::move(t)).second;
}

std::vector<Binding> KnowledgeGraph::match(const Triple& pattern) const {
    std::vector<Binding> out;
    for (const Triple& t : triples_) {
        Binding b;
        if (match_term(pattern.s, t.s, b) && match_term(pattern.p, t.p, b) &&
            match_term(pattern.o, t.o, b))
            out.push_back(std::move(b));
    }
    return canonical_bindings(std::move(out));
}

void KnowledgeGraph::merge(const KnowledgeGraph& other) {
    for (const Triple& t : other.triples_) triples_.insert(t);
}

std::string binding_key(const Binding& b) {
    std::string key;
    for (const auto& [name, term] : b) {
        key += name;
        key += '=';
        key += to_string(term);
        key += '\x1f';
    }
    return key;
}

std::vector<Binding> canonical_bindings(std::vector<Binding> bindings) {
    std::sort(bindings.begin(), bindings.end(),
              [](const Binding& a, const Binding& b) { return binding_key(a) < binding_key(b); });
    bindings.erase(std::unique(bindings.begin(), bindings.end(),
                               [](const Binding& a, const Binding& b) {
                                   return binding_key(a) == binding_key(b);
                               }),
                   bindings.end());
    return bindings;
}

} // namespace thoth::rdf
