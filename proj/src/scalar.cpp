#include "qcat/scalar.hpp"

#include <mutex>

#include "qcat/errors.hpp"

namespace qcat {

ScalarMode ScalarMode::root_of_unity(long ell) {
    if (ell < 3) throw DomainError("root-of-unity order must be >= 3");
    return ScalarMode(ell);
}

long ScalarMode::ell() const {
    if (is_generic()) throw DomainError("generic mode has no cyclotomic order");
    return ell_;
}

// ---------------------------------------------------------------------------
// Dense polynomial helpers.

DensePoly dense_trim(DensePoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

DensePoly dense_mul(const DensePoly& a, const DensePoly& b) {
    if (a.empty() || b.empty()) return {};
    DensePoly r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return dense_trim(std::move(r));
}

std::pair<DensePoly, DensePoly> dense_divmod(const DensePoly& a, const DensePoly& b) {
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    DensePoly rem = a, quot;
    if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, mpq_class(0));
    const mpq_class& lead = b.back();
    while (rem.size() >= b.size()) {
        mpq_class f = rem.back() / lead;
        std::size_t off = rem.size() - b.size();
        quot[off] = f;
        for (std::size_t j = 0; j < b.size(); ++j) rem[off + j] -= f * b[j];
        rem = dense_trim(std::move(rem));
        if (rem.empty()) break;
        if (rem.size() >= b.size() && rem.size() - b.size() >= off)
            throw InternalError("division did not reduce degree");
    }
    return {dense_trim(std::move(quot)), std::move(rem)};
}

namespace {

DensePoly dense_monic(DensePoly p) {
    if (p.empty()) return p;
    mpq_class lead = p.back();
    if (lead != 1)
        for (auto& c : p) c /= lead;
    return p;
}

DensePoly dense_sub_scaled(DensePoly a, const DensePoly& b, const mpq_class& f) {
    if (b.size() > a.size()) a.resize(b.size(), mpq_class(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= f * b[i];
    return dense_trim(std::move(a));
}

LaurentPoly from_dense(const DensePoly& p, long shift = 0) {
    LaurentPoly r;
    for (std::size_t i = 0; i < p.size(); ++i) r.add_term(long(i) + shift, p[i]);
    return r;
}

// Pre: no negative exponents.
DensePoly to_dense(const LaurentPoly& p) {
    if (p.is_zero()) return {};
    if (p.min_exp() < 0) throw InternalError("to_dense on a proper Laurent polynomial");
    DensePoly r(std::size_t(p.max_exp()) + 1, mpq_class(0));
    for (const auto& [e, c] : p.terms()) r[std::size_t(e)] = c;
    return r;
}

} // namespace

DensePoly dense_gcd(DensePoly a, DensePoly b) {
    a = dense_trim(std::move(a));
    b = dense_trim(std::move(b));
    while (!b.empty()) {
        auto [q, r] = dense_divmod(a, b);
        (void)q;
        a = std::move(b);
        b = dense_monic(std::move(r));
    }
    return dense_monic(std::move(a));
}

const DensePoly& cyclotomic(long ell) {
    static std::map<long, DensePoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(ell);
    if (it != cache.end()) return it->second;
    // Phi_ell = (x^ell - 1) / prod_{d | ell, d < ell} Phi_d, by recursion on divisors.
    DensePoly num(std::size_t(ell) + 1, mpq_class(0));
    num[0] = -1;
    num[std::size_t(ell)] = 1;
    for (long d = 1; d < ell; ++d) {
        if (ell % d != 0) continue;
        DensePoly phi_d;
        {
            auto jt = cache.find(d);
            if (jt != cache.end()) {
                phi_d = jt->second;
            } else {
                // Compute the divisor's cyclotomic polynomial by the same recursion.
                DensePoly nd(std::size_t(d) + 1, mpq_class(0));
                nd[0] = -1;
                nd[std::size_t(d)] = 1;
                for (long e = 1; e < d; ++e) {
                    if (d % e != 0) continue;
                    // All proper divisors of d are proper divisors of ell and were
                    // handled in an earlier iteration, so they are cached.
                    auto kt = cache.find(e);
                    if (kt == cache.end()) throw InternalError("cyclotomic cache order");
                    auto [q, r] = dense_divmod(nd, kt->second);
                    if (!r.empty()) throw InternalError("cyclotomic division not exact");
                    nd = std::move(q);
                }
                phi_d = std::move(nd);
                cache.emplace(d, phi_d);
            }
        }
        auto [q, r] = dense_divmod(num, phi_d);
        if (!r.empty()) throw InternalError("cyclotomic division not exact");
        num = std::move(q);
    }
    return cache.emplace(ell, std::move(num)).first->second;
}

// ---------------------------------------------------------------------------
// Scalar.

namespace {

std::vector<mpq_class> reduce_mod_cyclotomic(const LaurentPoly& p, long ell) {
    const DensePoly& phi = cyclotomic(ell);
    std::size_t deg = phi.size() - 1;
    DensePoly folded;
    for (const auto& [e, c] : p.terms()) {
        long r = e % ell;
        if (r < 0) r += ell;
        if (folded.size() <= std::size_t(r)) folded.resize(std::size_t(r) + 1, mpq_class(0));
        folded[std::size_t(r)] += c;
    }
    auto [q, rem] = dense_divmod(dense_trim(std::move(folded)), phi);
    (void)q;
    rem.resize(deg, mpq_class(0));
    return rem;
}

} // namespace

Scalar Scalar::zero(ScalarMode m) {
    if (m.is_generic()) return Scalar(m, LaurentPoly(), LaurentPoly::constant(1), {});
    std::size_t deg = cyclotomic(m.ell()).size() - 1;
    return Scalar(m, {}, {}, std::vector<mpq_class>(deg, mpq_class(0)));
}

Scalar Scalar::one(ScalarMode m) {
    return rational(mpq_class(1), m);
}

Scalar Scalar::rational(const mpq_class& c, ScalarMode m) {
    return from_laurent(LaurentPoly::constant(c), m);
}

Scalar Scalar::q_power(long exp, ScalarMode m) {
    return from_laurent(LaurentPoly::monomial(exp), m);
}

Scalar Scalar::from_laurent(const LaurentPoly& p, ScalarMode m) {
    if (m.is_generic()) return Scalar(m, p, LaurentPoly::constant(1), {});
    return Scalar(m, {}, {}, reduce_mod_cyclotomic(p, m.ell()));
}

Scalar Scalar::fraction(const LaurentPoly& num, const LaurentPoly& den, ScalarMode m) {
    if (m.is_generic()) {
        if (den.is_zero()) throw DivisionByZero("zero denominator");
        Scalar s(m, num, den, {});
        s.normalize_generic();
        return s;
    }
    return from_laurent(num, m) / from_laurent(den, m);
}

void Scalar::normalize_generic() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(1);
        return;
    }
    // Pull the denominator's q-power into the numerator so den(0) != 0.
    long vd = den_.min_exp();
    if (vd != 0) {
        den_ = den_.shifted(-vd);
        num_ = num_.shifted(-vd);
    }
    long u = num_.min_exp();
    DensePoly p = to_dense(num_.shifted(-u));
    DensePoly d = to_dense(den_);
    DensePoly g = dense_gcd(p, d);
    if (g.size() > 1) {
        p = dense_divmod(p, g).first;
        d = dense_divmod(d, g).first;
    }
    mpq_class lead = d.back();
    if (lead != 1) {
        for (auto& c : d) c /= lead;
        for (auto& c : p) c /= lead;
    }
    num_ = from_dense(p, u);
    den_ = from_dense(d);
}

void Scalar::check_same_mode(const Scalar& o) const {
    if (!(mode_ == o.mode_)) throw ModeMismatch("scalars from different coefficient modes");
}

bool Scalar::is_zero() const {
    if (mode_.is_generic()) return num_.is_zero();
    for (const auto& c : res_)
        if (c != 0) return false;
    return true;
}

bool Scalar::is_one() const {
    if (mode_.is_generic()) return num_.is_one() && den_.is_one();
    if (res_.empty() || res_[0] != 1) return false;
    for (std::size_t i = 1; i < res_.size(); ++i)
        if (res_[i] != 0) return false;
    return true;
}

Scalar Scalar::operator-() const {
    if (mode_.is_generic()) return Scalar(mode_, -num_, den_, {});
    std::vector<mpq_class> r(res_.size());
    for (std::size_t i = 0; i < res_.size(); ++i) r[i] = -res_[i];
    return Scalar(mode_, {}, {}, std::move(r));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_mode(o);
    if (mode_.is_generic()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        normalize_generic();
    } else {
        for (std::size_t i = 0; i < res_.size(); ++i) res_[i] += o.res_[i];
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same_mode(o);
    if (mode_.is_generic()) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ = den_ * o.den_;
        normalize_generic();
    } else {
        for (std::size_t i = 0; i < res_.size(); ++i) res_[i] -= o.res_[i];
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same_mode(o);
    if (mode_.is_generic()) {
        num_ = num_ * o.num_;
        den_ = den_ * o.den_;
        normalize_generic();
    } else {
        DensePoly prod = dense_mul(dense_trim(res_), dense_trim(o.res_));
        auto [q, rem] = dense_divmod(prod, cyclotomic(mode_.ell()));
        (void)q;
        rem.resize(res_.size(), mpq_class(0));
        res_ = std::move(rem);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (mode_.is_generic()) {
        Scalar s(mode_, den_, num_, {});
        s.normalize_generic();
        return s;
    }
    // Extended Euclid against Phi_ell; Phi_ell is irreducible over Q, so every
    // nonzero residue is invertible.
    const DensePoly& phi = cyclotomic(mode_.ell());
    DensePoly r0 = dense_trim(res_), r1 = phi;
    DensePoly u0 = {mpq_class(1)}, u1 = {};
    while (!r1.empty()) {
        auto [q, r] = dense_divmod(r0, r1);
        DensePoly u2 = u0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            DensePoly shifted(i, mpq_class(0));
            shifted.insert(shifted.end(), u1.begin(), u1.end());
            u2 = dense_sub_scaled(std::move(u2), shifted, q[i]);
        }
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.size() != 1) throw InternalError("cyclotomic polynomial not irreducible?");
    mpq_class scale = r0[0];
    std::vector<mpq_class> inv(res_.size(), mpq_class(0));
    for (std::size_t i = 0; i < u0.size() && i < inv.size(); ++i) inv[i] = u0[i] / scale;
    if (u0.size() > inv.size()) throw InternalError("inverse degree exceeds field degree");
    return Scalar(mode_, {}, {}, std::move(inv));
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc = one(mode_), base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_mode(o);
    if (mode_.is_generic()) return num_ == o.num_ && den_ == o.den_;
    return res_ == o.res_;
}

const LaurentPoly& Scalar::num() const {
    if (!mode_.is_generic()) throw ModeMismatch("num() needs generic mode");
    return num_;
}

const LaurentPoly& Scalar::den() const {
    if (!mode_.is_generic()) throw ModeMismatch("den() needs generic mode");
    return den_;
}

const std::vector<mpq_class>& Scalar::residue() const {
    if (mode_.is_generic()) throw ModeMismatch("residue() needs root-of-unity mode");
    return res_;
}

std::optional<mpq_class> Scalar::as_rational() const {
    if (mode_.is_generic()) {
        if (!den_.is_one()) return std::nullopt;
        if (num_.is_zero()) return mpq_class(0);
        if (num_.term_count() == 1 && num_.min_exp() == 0) return num_.coeff(0);
        return std::nullopt;
    }
    for (std::size_t i = 1; i < res_.size(); ++i)
        if (res_[i] != 0) return std::nullopt;
    return res_.empty() ? mpq_class(0) : res_[0];
}

mpq_class Scalar::eval(const mpq_class& x) const {
    if (!mode_.is_generic()) throw ModeMismatch("eval needs generic mode");
    mpq_class d = den_.eval(x);
    if (d == 0) throw DivisionByZero("denominator vanishes at evaluation point");
    return num_.eval(x) / d;
}

std::string Scalar::render(const std::string& var) const {
    if (!mode_.is_generic()) return from_dense(dense_trim(res_)).render(var);
    if (den_.is_one()) return num_.render(var);
    return "(" + num_.render(var) + ")/(" + den_.render(var) + ")";
}

// ---------------------------------------------------------------------------
// Quantum integers.

Scalar quantum_integer(long m, ScalarMode mode) {
    if (m < 0) throw DomainError("quantum integer of a negative argument");
    LaurentPoly p;
    for (long j = 0; j < m; ++j) p.add_term(m - 1 - 2 * j, mpq_class(1));
    return Scalar::from_laurent(p, mode);
}

Scalar quantum_factorial(long m, ScalarMode mode) {
    if (m < 0) throw DomainError("quantum factorial of a negative argument");
    Scalar acc = Scalar::one(mode);
    for (long j = 2; j <= m; ++j) acc *= quantum_integer(j, mode);
    return acc;
}

Scalar quantum_binomial(long m, long k, ScalarMode mode) {
    if (k < 0 || k > m) throw DomainError("quantum binomial needs 0 <= k <= m");
    // Work in the generic field (the division is exact there) and specialize at
    // the end; at a root of unity the factorials themselves may vanish.
    ScalarMode gen = ScalarMode::generic();
    Scalar v = quantum_factorial(m, gen) /
               (quantum_factorial(k, gen) * quantum_factorial(m - k, gen));
    if (!v.den().is_one()) throw InternalError("quantum binomial is not polynomial");
    if (mode.is_generic()) return v;
    return Scalar::from_laurent(v.num(), mode);
}

} // namespace qcat
