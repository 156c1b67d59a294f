#ifndef THOTH_RDF_GRAPH_HPP
#define THOTH_RDF_GRAPH_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "thoth/rdf/term.hpp"

namespace thoth::rdf {

/// A substitution from variable names to ground terms.
using Binding = std::map<std::string, Term>;

/// One-way matching of a pattern term against a data term. Extends
/// `binding` in place; returns false (binding possibly half-extended)
/// when the match fails. Callers that need rollback pass a copy.
bool match_term(const Term& pattern, const Term& data, Binding& binding);

/// Applies a binding to a pattern term. Unbound variables stay variables.
Term substitute(const Term& pattern, const Binding& binding);
Triple substitute(const Triple& pattern, const Binding& binding);

/// A static knowledge graph: a set of ground triples (set semantics,
/// duplicate inserts are no-ops) with pattern matching.
class KnowledgeGraph {
public:
    /// Inserts a data triple; returns false if it was already present.
    bool insert(Triple t);
    bool contains(const Triple& t) const { return triples_.count(t) > 0; }
    std::size_t size() const { return triples_.size(); }
    bool empty() const { return triples_.empty(); }

    const std::set<Triple>& triples() const { return triples_; }

    /// All bindings under which `pattern` (terms may be variables) is in
    /// the graph. No duplicates; ordered lexicographically by the bound
    /// terms' canonical serialization.
    std::vector<Binding> match(const Triple& pattern) const;

    void merge(const KnowledgeGraph& other);

private:
    std::set<Triple> triples_;
};

/// Sort-and-dedupe bindings by the canonical serialization of their bound
/// terms (variable names in lexicographic order).
std::vector<Binding> canonical_bindings(std::vector<Binding> bindings);

std::string binding_key(const Binding& b);

} // namespace thoth::rdf

#endif
