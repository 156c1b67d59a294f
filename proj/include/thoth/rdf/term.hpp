#ifndef THOTH_RDF_TERM_HPP
#define THOTH_RDF_TERM_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

namespace thoth::rdf {

class Term;

/// One RDF-star triple. Subject and object may themselves be quoted triples.
struct Triple;

enum class LiteralType { String, Integer, Decimal, Boolean };

/// An RDF-star term. Immutable after construction; copies are cheap
/// (quoted triples are shared). Variables are only legal inside patterns,
/// never in materialized data.
class Term {
public:
    enum class Kind { Iri, Literal, BlankNode, QuotedTriple, Variable };

    Term() : kind_(Kind::Iri) {}

    static Term iri(std::string text);
    static Term literal(std::string lexical, LiteralType type);
    static Term string_lit(std::string s) { return literal(std::move(s), LiteralType::String); }
    static Term integer_lit(std::int64_t v) { return literal(std::to_string(v), LiteralType::Integer); }
    static Term decimal_lit(std::string lexical) { return literal(std::move(lexical), LiteralType::Decimal); }
    static Term boolean_lit(bool v) { return literal(v ? "true" : "false", LiteralType::Boolean); }
    static Term blank(std::string label);
    static Term variable(std::string name);
    static Term quoted(Triple t);

    Kind kind() const { return kind_; }
    /// IRI text, literal lexical form, blank-node label or variable name.
    const std::string& text() const { return text_; }
    LiteralType literal_type() const { return literal_type_; }
    const Triple& quoted_triple() const;

    bool is_iri() const { return kind_ == Kind::Iri; }
    bool is_literal() const { return kind_ == Kind::Literal; }
    bool is_variable() const { return kind_ == Kind::Variable; }
    bool is_quoted() const { return kind_ == Kind::QuotedTriple; }

    /// True if this term or any nested quoted triple contains a variable.
    bool has_variables() const;
    /// Quoted-triple nesting depth; 0 for atomic terms.
    int quote_depth() const;

    /// Three-way structural compare; total order over all terms.
    int compare(const Term& other) const;

    friend bool operator==(const Term& a, const Term& b) { return a.compare(b) == 0; }
    friend bool operator!=(const Term& a, const Term& b) { return a.compare(b) != 0; }
    friend bool operator<(const Term& a, const Term& b) { return a.compare(b) < 0; }

private:
    Kind kind_;
    std::string text_;
    LiteralType literal_type_ = LiteralType::String;
    std::shared_ptr<const Triple> quoted_;
};

struct Triple {
    Term s, p, o;

    int compare(const Triple& other) const {
        if (int c = s.compare(other.s)) return c;
        if (int c = p.compare(other.p)) return c;
        return o.compare(other.o);
    }
    friend bool operator==(const Triple& a, const Triple& b) { return a.compare(b) == 0; }
    friend bool operator!=(const Triple& a, const Triple& b) { return a.compare(b) != 0; }
    friend bool operator<(const Triple& a, const Triple& b) { return a.compare(b) < 0; }
};

/// Numeric view of a literal. Integers and decimals always coerce; string
/// literals coerce only when `coerce_strings` is set and the lexical form
/// looks like a decimal number. Everything else yields nullopt.
std::optional<double> numeric_value(const Term& t, bool coerce_strings);

/// Throws std::invalid_argument unless the triple is valid as data:
/// IRI predicate, no variables anywhere.
void require_data_triple(const Triple& t);

} // namespace thoth::rdf

#endif
