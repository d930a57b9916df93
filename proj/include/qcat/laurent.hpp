#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace qcat {

// Laurent polynomial in one variable over Q, stored sparsely.
// Invariant: the exponent map holds no zero coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(const mpq_class& c);
    static LaurentPoly monomial(long exp, const mpq_class& c = mpq_class(1));

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    // Smallest / largest exponent with nonzero coefficient.  Pre: nonzero.
    long min_exp() const;
    long max_exp() const;

    mpq_class coeff(long exp) const;
    const std::map<long, mpq_class>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(long exp, const mpq_class& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly scaled(const mpq_class& c) const;
    // Multiply by q^shift.
    LaurentPoly shifted(long shift) const;

    // Evaluate at a rational point.  Pre: x != 0 when negative exponents are present.
    mpq_class eval(const mpq_class& x) const;

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    // Human-readable form, descending exponents: "q^2 + 2 - q^-2".
    std::string render(const std::string& var = "q") const;

private:
    std::map<long, mpq_class> terms_;
};

} // namespace qcat
