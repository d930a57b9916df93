#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcat/permutation.hpp"

namespace qcat {

// Integral weight of gl_n in coordinates, lambda = (lambda_1, ..., lambda_n).
using Weight = std::vector<long>;

// Generic parameter, or a primitive ell-th root of unity with ell >= 3.
class Regime {
public:
    static Regime generic() { return Regime(0); }
    static Regime root_of_unity(long ell);

    bool is_generic() const { return ell_ == 0; }
    long ell() const;

    bool operator==(const Regime&) const = default;

private:
    explicit Regime(long ell) : ell_(ell) {}
    long ell_ = 0;
};

// Sum of coordinate products (the restriction of tr(xy) to diagonal matrices).
long trace_form(const Weight& a, const Weight& b);

// (n-1, n-2, ..., 0): the half-sum shift in coordinates.
Weight rho(int n);

bool is_dominant(const Weight& w);

// content(lambda, i) = lambda_i - i + 1 in 1-based terms; i here is 0-based.
long content(const Weight& lambda, int i);
std::vector<long> contents(const Weight& lambda);

// Place permutation: (w mu)_j = mu_{w^-1(j)}.
Weight permute(const Permutation& w, const Weight& mu);
// w . lambda = w(lambda + rho) - rho.
Weight dot_action(const Permutation& w, const Weight& lambda);
// Affine reflection s_{i,m}: x -> s_i(x) + m*ell*(e_i - e_{i+1}), applied through
// the dot shift.  Pre: root-of-unity regime, 1 <= i <= n-1.
Weight affine_dot_action(int i, long m, const Weight& lambda, const Regime& regime);

// The single-box move lambda -> mu adding one unit in a column whose content is
// a-1 (exactly in the generic regime; mod ell and with both weights dominant at
// a root of unity).
bool arrow(const Weight& lambda, const Weight& mu, long a, const Regime& regime);

// h-eigenvalue of the class of lambda under the sl_2 pair at a: the signed
// count of removable-minus-addable directions,
//   generic:  #{i : c_i = a} - #{i : c_i = a-1}
//   ell-th root: the same with contents mod ell and the dominance conditions
//                lambda - e_i (resp. lambda + e_i) dominant.
// Pre (root of unity): lambda dominant.
long h_weight(const Weight& lambda, long a, const Regime& regime);

// Letters of the translation/toggle group acting diagonally on Z^n:
//   d: every entry + 1;  d^-1: every entry - 1;
//   t(j): entries equal to j-1 and j trade places.
struct TLetter {
    enum class Kind { Shift, ShiftInv, Toggle };
    Kind kind = Kind::Shift;
    long value = 0; // toggle index j, meaningful for Kind::Toggle

    bool operator==(const TLetter&) const = default;
};
using TWord = std::vector<TLetter>;

Weight apply_t_letter(const TLetter& g, const Weight& x);
// Letters act left to right: the first letter is applied first.
Weight apply_t_word(const TWord& word, const Weight& x);
std::string t_word_to_string(const TWord& word);
TWord parse_t_word(const std::string& text);

// Equal stabilizers under the dot action, i.e. equal coincidence patterns of
// lambda + rho and mu + rho.
bool same_dot_stabilizer(const Weight& lambda, const Weight& mu);

// A word carrying lambda + rho to mu + rho, empty optional iff the stabilizers
// differ.  The word is built by canonicalizing both sides (close the value gaps
// downward, shift the lowest value to 0, then permute the value classes) and is
// simplified by cancelling adjacent inverse letters.
std::optional<TWord> t_group_path(const Weight& lambda, const Weight& mu);

// Same orbit under the dot action of the (affine, at a root of unity) Weyl
// group: generic compares the multisets of lambda + rho, root of unity compares
// residue multisets mod ell together with the coordinate sum.
bool linkage_equal(const Weight& lambda, const Weight& mu, const Regime& regime);

std::string weight_to_string(const Weight& w);
Weight parse_weight(const std::string& text);

} // namespace qcat
