#ifndef THOTH_RDF_WRITER_HPP
#define THOTH_RDF_WRITER_HPP

#include <string>
#include <vector>

#include "thoth/rdf/term.hpp"

namespace thoth::rdf {

struct TimedTriple;

/// Canonical text form of a term in the turtle-star subset. Reparsing the
/// output of to_string reproduces the term exactly; canonical forms are
/// also the tie-break keys everywhere determinism calls for one.
std::string to_string(const Term& t);
std::string to_string(const Triple& t);

/// Serialize triples one statement per line, absolute IRIs, no prefixes.
std::string serialize_graph(const std::vector<Triple>& triples);

/// Serialize timed elements as `s p o @ tick .` lines.
std::string serialize_stream(const std::vector<TimedTriple>& elements);

std::string escape_string_literal(const std::string& raw);

} // namespace thoth::rdf

#endif
