#include "thoth/rdf/writer.hpp"

#include "thoth/rdf/stream.hpp"

namespace thoth::rdf {

std::string escape_string_literal(const std::string& raw) {
    std::string out;
    out.reserve(raw.size() + 2);
    for (char c : raw) {
        switch (c) {
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\\': out += "\\\\"; break;
        case '"': out += "\\\""; break;
        default: out += c;
        }
    }
    return out;
}

std::string to_string(const Term& t) {
    switch (t.kind()) {
    case Term::Kind::Iri:
        return "<" + t.text() + ">";
    case Term::Kind::Literal:
        switch (t.literal_type()) {
        case LiteralType::String: return "\"" + escape_string_literal(t.text()) + "\"";
        default: return t.text(); // integer / decimal / boolean lexical forms
        }
    case Term::Kind::BlankNode:
        return "_:" + t.text();
    case Term::Kind::QuotedTriple:
        return "<< " + to_string(t.quoted_triple()) + " >>";
    case Term::Kind::Variable:
        return "?" + t.text();
    }
    return {};
}

std::string to_string(const Triple& t) {
    return to_string(t.s) + " " + to_string(t.p) + " " + to_string(t.o);
}

std::string serialize_graph(const std::vector<Triple>& triples) {
    std::string out;
    for (const Triple& t : triples) {
        out += to_string(t);
        out += " .\n";
    }
    return out;
}

std::string serialize_stream(const std::vector<TimedTriple>& elements) {
    std::string out;
    for (const TimedTriple& e : elements) {
        out += "<< " + to_string(e.triple) + " >> @ " + std::to_string(e.timestamp) + " .\n";
    }
    return out;
}

} // namespace thoth::rdf
