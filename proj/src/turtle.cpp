#include "thoth/rdf/turtle.hpp"

#include <cctype>
#include <map>

#include "thoth/rdf/vocab.hpp"

namespace thoth::rdf {

namespace {

// Hand-rolled scanner/parser for the turtle-star subset. One token of
// lookahead, statement-level recursion only.
class TurtleParser {
public:
    TurtleParser(const std::string& text, const ParseOptions& opts, bool timed)
        : text_(text), opts_(opts), timed_(timed) {}

    std::vector<TimedTriple> run() {
        skip_ws();
        while (!eof()) {
            if (peek() == '@' && looking_at_prefix_decl()) {
                parse_prefix_decl();
            } else {
                parse_statement();
            }
            skip_ws();
        }
        return out_;
    }

private:
    const std::string& text_;
    ParseOptions opts_;
    bool timed_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    std::map<std::string, std::string> prefixes_;
    std::vector<TimedTriple> out_;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }
    [[noreturn]] void fail_at(int line, int col, const std::string& msg) const { throw ParseError(line, col, msg); }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return eof() ? '\0' : text_[pos_]; }
    char peek2() const { return pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0'; }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') { ++line_; col_ = 1; } else { ++col_; }
        return c;
    }

    void skip_ws() {
        while (!eof()) {
            char c = peek();
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '#' || (c == '/' && peek2() == '/')) {
                while (!eof() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    bool looking_at_prefix_decl() const { return text_.compare(pos_, 7, "@prefix") == 0; }

    static bool name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
    }

    void expect_char(char c, const char* what) {
        skip_ws();
        if (eof() || peek() != c) fail(std::string("expected '") + what + "'");
        advance();
    }

    void parse_prefix_decl() {
        for (int i = 0; i < 7; ++i) advance(); // @prefix
        skip_ws();
        std::string prefix;
        while (!eof() && name_char(peek())) prefix += advance();
        expect_char(':', ":");
        skip_ws();
        if (eof() || peek() != '<') fail("expected IRI in @prefix declaration");
        std::string iri = read_iriref_raw();
        prefixes_[prefix] = iri;
        expect_char('.', ".");
    }

    std::string read_iriref_raw() {
        advance(); // <
        std::string iri;
        while (!eof() && peek() != '>') {
            if (peek() == '\n') fail("unterminated IRI");
            iri += advance();
        }
        if (eof()) fail("unterminated IRI");
        advance(); // >
        return iri;
    }

    std::string resolve_pname(const std::string& prefix, const std::string& local, int line, int col) {
        auto it = prefixes_.find(prefix);
        if (it == prefixes_.end())
            fail_at(line, col, "unknown prefix '" + prefix + ":'");
        return it->second + local;
    }

    // IRIs written in angle brackets may contain a prefixed name
    // (the listings write stream IRIs as <:ssr>); expand when the prefix
    // is declared and the text is not an absolute IRI.
    Term iri_from_angle(const std::string& raw, int line, int col) {
        if (raw.find("://") == std::string::npos) {
            auto colon = raw.find(':');
            if (colon != std::string::npos) {
                std::string prefix = raw.substr(0, colon);
                if (prefixes_.count(prefix))
                    return Term::iri(prefixes_[prefix] + raw.substr(colon + 1));
            }
        }
        (void)line; (void)col;
        return Term::iri(raw);
    }

    Term parse_term(int depth, bool predicate_position) {
        skip_ws();
        if (eof()) fail("unexpected end of input");
        int line = line_, col = col_;
        char c = peek();

        if (c == '<' && peek2() == '<') {
            if (predicate_position) fail("quoted triple cannot be a predicate");
            advance(); advance();
            if (depth + 1 > opts_.max_quote_depth)
                fail_at(line, col, "quoted-triple nesting exceeds depth " + std::to_string(opts_.max_quote_depth));
            Term s = parse_term(depth + 1, false);
            Term p = parse_term(depth + 1, true);
            Term o = parse_term(depth + 1, false);
            skip_ws();
            if (peek() != '>' || peek2() != '>') fail("expected '>>'");
            advance(); advance();
            return Term::quoted(Triple{std::move(s), std::move(p), std::move(o)});
        }
        if (c == '<') {
            std::string raw = read_iriref_raw();
            return iri_from_angle(raw, line, col);
        }
        if (c == '\'' || c == '"') {
            if (predicate_position) fail("literal cannot be a predicate");
            return Term::string_lit(read_quoted_string(c));
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || ((c == '+' || c == '-') && std::isdigit(static_cast<unsigned char>(peek2())))) {
            if (predicate_position) fail("literal cannot be a predicate");
            return read_number();
        }
        if (c == '_' && peek2() == ':') {
            if (predicate_position) fail("blank node cannot be a predicate");
            advance(); advance();
            std::string label;
            while (!eof() && name_char(peek())) label += advance();
            if (label.empty()) fail("empty blank-node label");
            return Term::blank(label);
        }

        // prefixed name, `a`, or boolean
        std::string word;
        while (!eof() && name_char(peek())) word += advance();
        if (!eof() && peek() == ':') {
            advance();
            std::string local;
            while (!eof() && name_char(peek())) local += advance();
            return Term::iri(resolve_pname(word, local, line, col));
        }
        if (word == "a") return Term::iri(vocab::kRdfType);
        if (word == "true" || word == "false") {
            if (predicate_position) fail("literal cannot be a predicate");
            return Term::boolean_lit(word == "true");
        }
        if (word.empty()) fail(std::string("unexpected character '") + c + "'");
        fail_at(line, col, "expected ':' after prefix '" + word + "'");
    }

    std::string read_quoted_string(char quote) {
        advance();
        std::string value;
        while (true) {
            if (eof()) fail("unterminated string literal");
            char c = advance();
            if (c == quote) break;
            if (c == '\n') fail("unterminated string literal");
            if (c == '\\') {
                if (eof()) fail("unterminated escape");
                char e = advance();
                switch (e) {
                case 'n': value += '\n'; break;
                case 't': value += '\t'; break;
                case '\\': value += '\\'; break;
                case '\'': value += '\''; break;
                case '"': value += '"'; break;
                default: fail(std::string("unknown escape '\\") + e + "'");
                }
            } else {
                value += c;
            }
        }
        return value;
    }

    Term read_number() {
        std::string lex;
        if (peek() == '+' || peek() == '-') lex += advance();
        bool dot = false;
        while (!eof()) {
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                lex += advance();
            } else if (c == '.' && !dot && std::isdigit(static_cast<unsigned char>(peek2()))) {
                // A dot is part of the number only when digits follow;
                // otherwise it terminates the statement.
                dot = true;
                lex += advance();
            } else {
                break;
            }
        }
        return dot ? Term::decimal_lit(lex) : Term::literal(lex, LiteralType::Integer);
    }

    Tick parse_tick_annotation() {
        // caller saw '@'
        advance();
        skip_ws();
        if (eof() || !(std::isdigit(static_cast<unsigned char>(peek())) || peek() == '-'))
            fail("expected integer tick after '@'");
        Term n = read_number();
        if (n.literal_type() != LiteralType::Integer) fail("tick must be an integer");
        return std::stoll(n.text());
    }

    void emit(Term s, Term p, Term o, Tick at, int line, int col) {
        Triple t{std::move(s), std::move(p), std::move(o)};
        try {
            require_data_triple(t);
        } catch (const std::invalid_argument& e) {
            fail_at(line, col, e.what());
        }
        if (timed_ && at < 0) fail_at(line, col, "negative timestamp");
        out_.push_back(TimedTriple{std::move(t), at});
    }

    void parse_statement() {
        int line = line_, col = col_;
        Term subject = parse_term(0, false);
        Tick at = 0;

        skip_ws();
        if (peek() == '@') {
            if (!timed_) fail("'@' timestamps are only allowed in stream documents");
            at = parse_tick_annotation();
            skip_ws();
            if (peek() == ';') { advance(); skip_ws(); }
        }

        if (peek() == '.') {
            // Standalone quoted triple: asserts the inner triple.
            advance();
            if (!subject.is_quoted())
                fail_at(line, col, "statement has no predicate");
            const Triple& q = subject.quoted_triple();
            emit(q.s, q.p, q.o, at, line, col);
            return;
        }

        while (true) {
            Term p = parse_term(0, true);
            Term o = parse_term(0, false);
            emit(subject, std::move(p), std::move(o), at, line, col);
            skip_ws();
            if (peek() == ';') {
                advance();
                skip_ws();
                if (peek() == '.') break; // tolerate trailing ';'
                continue;
            }
            break;
        }
        expect_char('.', ".");
    }
};

} // namespace

std::vector<Triple> parse_turtle_star(const std::string& text, const ParseOptions& opts) {
    TurtleParser p(text, opts, /*timed=*/false);
    std::vector<Triple> triples;
    for (auto& tt : p.run()) triples.push_back(std::move(tt.triple));
    return triples;
}

std::vector<TimedTriple> parse_stream_document(const std::string& text, const ParseOptions& opts) {
    TurtleParser p(text, opts, /*timed=*/true);
    return p.run();
}

} // namespace thoth::rdf
