#include <cctype>

#include "qcat/errors.hpp"
#include "qcat/hecke.hpp"

namespace qcat {

std::string render(const HeckeContext& ctx, const HeckeElement& e) {
    if (e.is_zero()) return "0";
    const std::string var =
        ctx.q0() == Scalar::generator(ctx.mode()) ? "q0" : "q";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : e.terms()) {
        if (!first) out += " + ";
        first = false;
        out += "(" + c.render(var) + ")*X[";
        for (std::size_t i = 0; i < key.xexp.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(key.xexp[i]);
        }
        out += "]*T[" + key.w.to_string() + "]";
    }
    return out;
}

namespace {

struct ElemLexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
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
            throw ParseError(std::string("expected '") + c + "' at offset " +
                             std::to_string(pos) + " in \"" + text + "\"");
    }
    long read_int() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw ParseError("expected integer at offset " + std::to_string(start) + " in \"" +
                             text + "\"");
        return std::stol(text.substr(start, pos - start));
    }
    // Balanced "(...)" starting at the current position; returns the inside.
    std::string read_parenthesized() {
        expect('(');
        std::size_t depth = 1, start = pos;
        while (pos < text.size() && depth > 0) {
            if (text[pos] == '(') ++depth;
            if (text[pos] == ')') --depth;
            ++pos;
        }
        if (depth != 0) throw ParseError("unbalanced parentheses in \"" + text + "\"");
        return text.substr(start, pos - start - 1);
    }
};

HeckeElement parse_factor(const HeckeContext& ctx, ElemLexer& lex) {
    char c = lex.peek();
    if (c == '(') {
        std::string inner = lex.read_parenthesized();
        return HeckeElement::unit(ctx).scaled(Scalar::parse(inner, ctx.mode()));
    }
    if (c == 'X') {
        ++lex.pos;
        lex.expect('[');
        std::vector<int> xe;
        xe.push_back(int(lex.read_int()));
        while (lex.accept(',')) xe.push_back(int(lex.read_int()));
        lex.expect(']');
        if (int(xe.size()) != ctx.size())
            throw ParseError("X exponent vector has the wrong length");
        return HeckeElement::monomial(ctx, std::move(xe), Permutation::identity(ctx.size()),
                                      Scalar::one(ctx.mode()));
    }
    if (c == 'T') {
        ++lex.pos;
        lex.expect('[');
        std::string body;
        while (lex.pos < lex.text.size() && lex.text[lex.pos] != ']') body += lex.text[lex.pos++];
        lex.expect(']');
        Permutation w = Permutation::parse(body);
        if (w.size() != ctx.size()) throw ParseError("T permutation has the wrong size");
        return HeckeElement::t_basis(ctx, w);
    }
    // Bare scalar atom: integer, or a variable with an optional integer power.
    if (std::isdigit(static_cast<unsigned char>(c)))
        return HeckeElement::unit(ctx).scaled(
            Scalar::rational(mpq_class(lex.read_int()), ctx.mode()));
    if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string w;
        while (lex.pos < lex.text.size() &&
               (std::isalnum(static_cast<unsigned char>(lex.text[lex.pos]))))
            w += lex.text[lex.pos++];
        if (w != "q" && w != "q0") throw ParseError("unknown symbol \"" + w + "\"");
        long e = 1;
        if (lex.accept('^')) e = lex.read_int();
        return HeckeElement::unit(ctx).scaled(Scalar::q_power(e, ctx.mode()));
    }
    throw ParseError("unexpected character at offset " + std::to_string(lex.pos) + " in \"" +
                     lex.text + "\"");
}

HeckeElement parse_product(const HeckeContext& ctx, ElemLexer& lex) {
    HeckeElement acc = parse_factor(ctx, lex);
    while (lex.accept('*')) acc = mul(ctx, acc, parse_factor(ctx, lex));
    return acc;
}

} // namespace

HeckeElement parse_element(const HeckeContext& ctx, const std::string& text) {
    ElemLexer lex{text};
    bool neg = lex.accept('-');
    HeckeElement acc = parse_product(ctx, lex);
    if (neg) acc = -acc;
    while (true) {
        if (lex.accept('+')) {
            acc += parse_product(ctx, lex);
        } else if (lex.accept('-')) {
            acc -= parse_product(ctx, lex);
        } else {
            break;
        }
    }
    if (lex.peek() != '\0')
        throw ParseError("trailing input at offset " + std::to_string(lex.pos) + " in \"" + text +
                         "\"");
    return acc;
}

} // namespace qcat
