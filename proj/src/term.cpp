#include "thoth/rdf/term.hpp"

#include <cctype>
#include <cstdlib>

namespace thoth::rdf {

Term Term::iri(std::string text) {
    Term t;
    t.kind_ = Kind::Iri;
    t.text_ = std::move(text);
    return t;
}

Term Term::literal(std::string lexical, LiteralType type) {
    Term t;
    t.kind_ = Kind::Literal;
    t.text_ = std::move(lexical);
    t.literal_type_ = type;
    return t;
}

Term Term::blank(std::string label) {
    Term t;
    t.kind_ = Kind::BlankNode;
    t.text_ = std::move(label);
    return t;
}

Term Term::variable(std::string name) {
    Term t;
    t.kind_ = Kind::Variable;
    t.text_ = std::move(name);
    return t;
}

Term Term::quoted(Triple triple) {
    Term t;
    t.kind_ = Kind::QuotedTriple;
    t.quoted_ = std::make_shared<const Triple>(std::move(triple));
    return t;
}

const Triple& Term::quoted_triple() const {
    if (!quoted_) throw std::logic_error("term is not a quoted triple");
    return *quoted_;
}

bool Term::has_variables() const {
    switch (kind_) {
    case Kind::Variable: return true;
    case Kind::QuotedTriple:
        return quoted_->s.has_variables() || quoted_->p.has_variables() || quoted_->o.has_variables();
    default: return false;
    }
}

int Term::quote_depth() const {
    if (kind_ != Kind::QuotedTriple) return 0;
    int d = quoted_->s.quote_depth();
    d = std::max(d, quoted_->p.quote_depth());
    d = std::max(d, quoted_->o.quote_depth());
    return d + 1;
}

int Term::compare(const Term& other) const {
    if (kind_ != other.kind_)
        return static_cast<int>(kind_) < static_cast<int>(other.kind_) ? -1 : 1;
    switch (kind_) {
    case Kind::Literal:
        if (literal_type_ != other.literal_type_)
            return static_cast<int>(literal_type_) < static_cast<int>(other.literal_type_) ? -1 : 1;
        return text_.compare(other.text_);
    case Kind::QuotedTriple:
        return quoted_->compare(*other.quoted_);
    default:
        return text_.compare(other.text_);
    }
}

namespace {

bool looks_numeric(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    bool digits = false, dot = false;
    for (; i < s.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits = true;
        } else if (s[i] == '.' && !dot) {
            dot = true;
        } else {
            return false;
        }
    }
    return digits;
}

} // namespace

std::optional<double> numeric_value(const Term& t, bool coerce_strings) {
    if (!t.is_literal()) return std::nullopt;
    switch (t.literal_type()) {
    case LiteralType::Integer:
    case LiteralType::Decimal:
        return std::strtod(t.text().c_str(), nullptr);
    case LiteralType::String:
        if (coerce_strings && looks_numeric(t.text()))
            return std::strtod(t.text().c_str(), nullptr);
        return std::nullopt;
    case LiteralType::Boolean:
        return std::nullopt;
    }
    return std::nullopt;
}

void require_data_triple(const Triple& t) {
    if (!t.p.is_iri())
        throw std::invalid_argument("predicate must be an IRI");
    if (t.s.has_variables() || t.p.has_variables() || t.o.has_variables())
        throw std::invalid_argument("variables are not allowed in data triples");
}

} // namespace thoth::rdf
