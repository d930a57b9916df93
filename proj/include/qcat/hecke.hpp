#pragma once

#include <map>
#include <vector>

#include "qcat/permutation.hpp"
#include "qcat/report.hpp"
#include "qcat/scalar.hpp"

namespace qcat {

// Ambient data for the affine Hecke algebra on `size` strands: invertible
// commuting generators X_1..X_size, braid generators T_1..T_{size-1}, and the
// quadratic parameter q0 (invertible, != 1).
class HeckeContext {
public:
    HeckeContext(int size, Scalar q0);

    int size() const { return size_; }
    const Scalar& q0() const { return q0_; }
    ScalarMode mode() const { return q0_.mode(); }

private:
    int size_;
    Scalar q0_;
};

// Basis monomial X^alpha T_w of the Bernstein normal form.
struct HeckeKey {
    std::vector<int> xexp; // alpha, one exponent per strand
    Permutation w;

    auto operator<=>(const HeckeKey&) const = default;
};

// Element in normal form: finite sum of scalar * X^alpha T_w.
// Invariant: no stored zero coefficients; all keys sized to the context.
class HeckeElement {
public:
    HeckeElement() = default;

    static HeckeElement zero();
    static HeckeElement unit(const HeckeContext& ctx);
    static HeckeElement monomial(const HeckeContext& ctx, std::vector<int> xexp,
                                 const Permutation& w, const Scalar& c);
    // X_i^exp (1-based i).
    static HeckeElement x_power(const HeckeContext& ctx, int i, int exp);
    // T_w as a basis element.
    static HeckeElement t_basis(const HeckeContext& ctx, const Permutation& w);
    // T_i and its inverse q0^-1 T_i + (q0^-1 - 1).
    static HeckeElement t_gen(const HeckeContext& ctx, int i);
    static HeckeElement t_gen_inverse(const HeckeContext& ctx, int i);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<HeckeKey, Scalar>& terms() const { return terms_; }

    void add_term(const HeckeKey& key, const Scalar& c);

    HeckeElement operator-() const;
    HeckeElement& operator+=(const HeckeElement& o);
    HeckeElement& operator-=(const HeckeElement& o);
    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }

    HeckeElement scaled(const Scalar& c) const;

    bool operator==(const HeckeElement& o) const { return terms_ == o.terms_; }

private:
    std::map<HeckeKey, Scalar> terms_;
};

// Left multiplication by T_i, the single rewriting step everything else is
// built from.
HeckeElement lmul_t(const HeckeContext& ctx, int i, const HeckeElement& e);

// Product in normal form.  `mul` distributes the left factor's terms across
// OpenMP threads; `mul_serial` is the reference implementation the tests
// compare against.
HeckeElement mul(const HeckeContext& ctx, const HeckeElement& x, const HeckeElement& y);
HeckeElement mul_serial(const HeckeContext& ctx, const HeckeElement& x, const HeckeElement& y);

HeckeElement power(const HeckeContext& ctx, const HeckeElement& x, int e);

enum class SymmetrizerKind { Trivial, Sign };

// Quasi-idempotent c = sum_w coeff(w) T_w over the finite symmetric group on
// the context's strands; coeff is 1 for Trivial and (-q0)^{-length} for Sign.
HeckeElement symmetrizer(const HeckeContext& ctx, SymmetrizerKind kind);
// P with c*c = P*c: sum_w q0^{length(w)} (Trivial) or sum_w q0^{-length(w)} (Sign).
Scalar symmetrizer_scale(const HeckeContext& ctx, SymmetrizerKind kind);

// Exact check of
//   T_1 (X_2 - a)^N - (X_1 - a)^N T_1
//     = (q0 - 1) X_2 sum_{j=0}^{N-1} (X_1 - a)^{N-1-j} (X_2 - a)^j
// in the normal-form engine.  Pre: ctx.size() >= 2, 1 <= N <= 16.
VerificationReport verify_commutation(const HeckeContext& ctx, int n_power, const mpq_class& a);

// Text form "(q0-1)*X[0,1,0]*T[2 1 3]"; the coefficient variable renders as
// "q0" exactly when the context parameter is the field generator.
std::string render(const HeckeContext& ctx, const HeckeElement& e);
HeckeElement parse_element(const HeckeContext& ctx, const std::string& text);

} // namespace qcat
