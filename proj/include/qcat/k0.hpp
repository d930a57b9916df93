#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qcat/weights.hpp"

namespace qcat {

// Formal Q-linear combination of highest-weight basis classes: Verma classes
// [M(lambda)], lambda in Z^n, in the generic regime; Weyl classes [D(lambda)],
// lambda dominant, at a root of unity.
class K0Vector {
public:
    K0Vector(int n, Regime regime);
    static K0Vector basis(int n, const Regime& regime, const Weight& lambda);

    int rank() const { return n_; }
    const Regime& regime() const { return regime_; }
    const std::map<Weight, mpq_class>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // Validates rank and (at a root of unity) dominance.
    void add(const Weight& lambda, const mpq_class& coeff);

    K0Vector operator-() const;
    K0Vector& operator+=(const K0Vector& o);
    K0Vector& operator-=(const K0Vector& o);
    friend K0Vector operator+(K0Vector a, const K0Vector& b) { return a += b; }
    friend K0Vector operator-(K0Vector a, const K0Vector& b) { return a -= b; }
    K0Vector scaled(const mpq_class& c) const;

    bool operator==(const K0Vector& o) const;

private:
    int n_;
    Regime regime_;
    std::map<Weight, mpq_class> terms_;
};

// The sl_2 triple on K0 attached to the index a: e adds a box of content a-1,
// f removes a box of content a, h scales a class by its h-weight.
K0Vector apply_e(const K0Vector& v, long a);
K0Vector apply_f(const K0Vector& v, long a);
K0Vector apply_h(const K0Vector& v, long a);

// h-weight of one basis class.
long block_of(const Weight& lambda, long a, const Regime& regime);
// Common h-weight of every class in v (DomainError if v mixes blocks or is 0).
long homogeneous_block(const K0Vector& v, long a);

// The sl_2 reflection on K0, three independent ways (generic regime only):
// the closed toggle-and-sign formula, the exact matrix exponential
// exp(-f) exp(e) exp(-f) on the toggle-closed subspace, and the alternating
// divided-power sum over the reflection complex.
K0Vector reflect_closed(const K0Vector& v, long a);
K0Vector reflect_exp(const K0Vector& v, long a);
K0Vector reflect_euler(const K0Vector& v, long a);

// The 2x2 integral model the reflection is patterned on.
struct Sl2Data {
    using Mat2 = std::array<std::array<mpq_class, 2>, 2>;
    Mat2 e, f, h, s;

    static Sl2Data standard();
    // h == e f - f e and s == exp(-f) exp(e) exp(-f) == [[0,1],[-1,0]].
    bool check() const;
};

// One verified step table for the equivalence-path certificate.
struct PathEntry {
    Permutation w;
    Weight source;                                    // w . lambda
    K0Vector image = K0Vector(1, Regime::generic());  // composite of the source class
    Weight expected;                                  // w . mu
    bool pass = false;
};

struct PathCertificate {
    Weight lambda, mu;
    TWord word;
    std::vector<PathEntry> entries;
    bool pass = false;
};

// Certificate that the composite of determinant twists and reflections along
// t_group_path(lambda, mu) carries [M(w . lambda)] to [M(w . mu)] with
// coefficient exactly +1 for every w.  Pre: equal dot stabilizers (DomainError
// otherwise); generic regime.
PathCertificate derived_path(const Weight& lambda, const Weight& mu);

// JSON forms.
std::string k0_to_json(const K0Vector& v);
K0Vector k0_from_json(const std::string& text);
std::string certificate_to_json(const PathCertificate& c);

} // namespace qcat
