#include <cctype>

#include "qcat/errors.hpp"
#include "qcat/scalar.hpp"

namespace qcat {

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos) +
                             " in \"" + text + "\"");
    }

    mpz_class read_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start)
            throw ParseError("expected integer at offset " + std::to_string(pos) + " in \"" +
                             text + "\"");
        return mpz_class(text.substr(start, pos - start));
    }

    std::string read_word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }
};

struct ExprParser {
    Lexer lex;
    ScalarMode mode;
    const std::vector<std::string>& vars;

    Scalar parse_expr() {
        bool neg = lex.accept('-');
        if (!neg) lex.accept('+');
        Scalar acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            if (lex.accept('+')) {
                acc += parse_term();
            } else if (lex.accept('-')) {
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    Scalar parse_term() {
        Scalar acc = parse_factor();
        while (true) {
            if (lex.accept('*')) {
                acc *= parse_factor();
            } else if (lex.accept('/')) {
                acc /= parse_factor();
            } else {
                return acc;
            }
        }
    }

    Scalar parse_factor() {
        Scalar base = parse_primary();
        if (lex.accept('^')) {
            bool neg = lex.accept('-');
            mpz_class e = lex.read_integer();
            if (!e.fits_slong_p()) throw ParseError("exponent out of range");
            long exp = e.get_si();
            base = base.pow(neg ? -exp : exp);
        }
        return base;
    }

    Scalar parse_primary() {
        char c = lex.peek();
        if (c == '(') {
            lex.expect('(');
            Scalar inner = parse_expr();
            lex.expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Scalar::rational(mpq_class(lex.read_integer()), mode);
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string w = lex.read_word();
            for (const auto& v : vars)
                if (w == v) return Scalar::generator(mode);
            throw ParseError("unknown symbol \"" + w + "\" in \"" + lex.text + "\"");
        }
        throw ParseError("unexpected character at offset " + std::to_string(lex.pos) + " in \"" +
                         lex.text + "\"");
    }
};

} // namespace

Scalar Scalar::parse(const std::string& text, ScalarMode m, const std::vector<std::string>& vars) {
    ExprParser p{Lexer{text}, m, vars};
    Scalar v = p.parse_expr();
    if (!p.lex.eof())
        throw ParseError("trailing input at offset " + std::to_string(p.lex.pos) + " in \"" +
                         text + "\"");
    return v;
}

} // namespace qcat
