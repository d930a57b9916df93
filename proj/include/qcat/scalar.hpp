#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcat/laurent.hpp"

namespace qcat {

// Coefficient field selector: the rational function field Q(q), or the
// cyclotomic field Q[q]/(Phi_ell(q)) for ell >= 3.  ell = 2 is excluded by the
// theory (q = -1 degenerates the quadratic relations), ell < 2 by sanity.
class ScalarMode {
public:
    static ScalarMode generic() { return ScalarMode(0); }
    static ScalarMode root_of_unity(long ell);

    bool is_generic() const { return ell_ == 0; }
    long ell() const; // pre: root-of-unity mode

    bool operator==(const ScalarMode&) const = default;

private:
    explicit ScalarMode(long ell) : ell_(ell) {}
    long ell_ = 0;
};

// Element of the coefficient field.
//
// Generic mode canonical form: num/den with den a genuine polynomial (minimal
// exponent 0) that is monic, gcd(num-without-q-power, den) = 1.  Equality is
// therefore representational equality.
//
// Root-of-unity mode: the residue vector of length phi(ell), coefficients of
// 1, q, ..., q^(phi(ell)-1) modulo the cyclotomic polynomial Phi_ell.
class Scalar {
public:
    Scalar() : Scalar(zero(ScalarMode::generic())) {}

    static Scalar zero(ScalarMode m);
    static Scalar one(ScalarMode m);
    static Scalar rational(const mpq_class& c, ScalarMode m);
    static Scalar integer(long v, ScalarMode m) { return rational(mpq_class(v), m); }
    // q^exp
    static Scalar q_power(long exp, ScalarMode m);
    static Scalar generator(ScalarMode m) { return q_power(1, m); }
    static Scalar from_laurent(const LaurentPoly& p, ScalarMode m);
    static Scalar fraction(const LaurentPoly& num, const LaurentPoly& den, ScalarMode m);

    ScalarMode mode() const { return mode_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;
    Scalar pow(long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Generic-mode accessors.
    const LaurentPoly& num() const;
    const LaurentPoly& den() const;
    // Root-of-unity accessor.
    const std::vector<mpq_class>& residue() const;

    // Exact rational value if the scalar is a constant.
    std::optional<mpq_class> as_rational() const;

    // Generic mode: evaluate num/den at a rational point (DivisionByZero if the
    // denominator vanishes there).
    mpq_class eval(const mpq_class& x) const;

    std::string render(const std::string& var = "q") const;

    // Full expression grammar: + - * / ^ ( ), integer literals, the variable
    // (any name listed in vars).  Throws ParseError on malformed input.
    static Scalar parse(const std::string& text, ScalarMode m,
                        const std::vector<std::string>& vars = {"q", "q0"});

private:
    Scalar(ScalarMode m, LaurentPoly num, LaurentPoly den, std::vector<mpq_class> res)
        : mode_(m), num_(std::move(num)), den_(std::move(den)), res_(std::move(res)) {}

    void normalize_generic();
    void check_same_mode(const Scalar& o) const;

    ScalarMode mode_;
    // Generic payload.
    LaurentPoly num_, den_;
    // Root-of-unity payload.
    std::vector<mpq_class> res_;
};

// Dense polynomial helpers over Q, used by the cyclotomic arithmetic and the
// canonical-form reduction.  Coefficient vectors are little-endian; invariant:
// no trailing zero (the zero polynomial is the empty vector).
using DensePoly = std::vector<mpq_class>;
DensePoly dense_trim(DensePoly p);
DensePoly dense_mul(const DensePoly& a, const DensePoly& b);
// Euclidean division; returns {quotient, remainder}.
std::pair<DensePoly, DensePoly> dense_divmod(const DensePoly& a, const DensePoly& b);
DensePoly dense_gcd(DensePoly a, DensePoly b); // monic
// Phi_ell, integer coefficients. Memoized.
const DensePoly& cyclotomic(long ell);

// Balanced quantum integer [m] = (q^m - q^-m)/(q - q^-1), as an element of the
// chosen coefficient field.  Pre: m >= 0.
Scalar quantum_integer(long m, ScalarMode mode);
// [m]! = [m][m-1]...[1]
Scalar quantum_factorial(long m, ScalarMode mode);
// [m choose k] = [m]!/([k]![m-k]!), always a Laurent polynomial; computed
// exactly in the generic field and then specialized, so it is well defined at
// roots of unity too.  Pre: 0 <= k <= m.
Scalar quantum_binomial(long m, long k, ScalarMode mode);

} // namespace qcat
