#include "qcat/laurent.hpp"

#include "qcat/errors.hpp"

namespace qcat {

LaurentPoly LaurentPoly::constant(const mpq_class& c) {
    return monomial(0, c);
}

LaurentPoly LaurentPoly::monomial(long exp, const mpq_class& c) {
    LaurentPoly p;
    if (c != 0) p.terms_[exp] = c;
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

long LaurentPoly::min_exp() const {
    if (terms_.empty()) throw DomainError("min_exp of zero polynomial");
    return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (terms_.empty()) throw DomainError("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

mpq_class LaurentPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void LaurentPoly::add_term(long exp, const mpq_class& c) {
    if (c == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(const mpq_class& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

LaurentPoly LaurentPoly::shifted(long shift) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + shift, c);
    return r;
}

mpq_class LaurentPoly::eval(const mpq_class& x) const {
    mpq_class acc(0);
    for (const auto& [e, c] : terms_) {
        if (e >= 0) {
            mpq_class p(1);
            for (long i = 0; i < e; ++i) p *= x;
            acc += c * p;
        } else {
            if (x == 0) throw DivisionByZero("eval at 0 with negative exponent");
            mpq_class p(1);
            for (long i = 0; i < -e; ++i) p *= x;
            acc += c / p;
        }
    }
    return acc;
}

namespace {

// "3/2*q^-1", "q", "-q^2", "5"; sign handling is the caller's job for the
// first term, ours afterwards.
void render_term(std::string& out, bool first, long exp, const mpq_class& c,
                 const std::string& var) {
    mpq_class a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    if (first) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    bool unit = (a == 1);
    if (exp == 0) {
        out += a.get_str();
        return;
    }
    if (!unit) {
        out += a.get_str();
        out += "*";
    }
    out += var;
    if (exp != 1) {
        out += "^";
        out += std::to_string(exp);
    }
}

} // namespace

std::string LaurentPoly::render(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        render_term(out, first, it->first, it->second, var);
        first = false;
    }
    return out;
}

} // namespace qcat
