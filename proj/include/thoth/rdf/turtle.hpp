#ifndef THOTH_RDF_TURTLE_HPP
#define THOTH_RDF_TURTLE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "thoth/rdf/stream.hpp"
#include "thoth/rdf/term.hpp"

namespace thoth::rdf {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + message),
          line(line), column(column) {}
    int line;
    int column;
};

struct ParseOptions {
    int max_quote_depth = 8;
};

/// Parses the turtle-star subset: `@prefix` declarations, `;` predicate
/// lists, the `a` keyword, quoted triples `<< s p o >>`, string / integer /
/// decimal / boolean literals, `#` and `//` comments. A statement that is
/// just a quoted triple (`<< s p o >> .`) asserts the inner triple;
/// otherwise quoted triples are opaque terms and are not asserted.
/// Throws ParseError.
std::vector<Triple> parse_turtle_star(const std::string& text, const ParseOptions& opts = {});

/// Same grammar plus one extension: a statement may carry `@ <tick>` right
/// after its subject, timestamping every triple it expands to. Statements
/// without an annotation land at tick 0.
std::vector<TimedTriple> parse_stream_document(const std::string& text, const ParseOptions& opts = {});

} // namespace thoth::rdf

#endif
