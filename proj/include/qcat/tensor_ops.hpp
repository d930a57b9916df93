#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "qcat/report.hpp"
#include "qcat/scalar.hpp"
#include "qcat/weights.hpp"

namespace qcat {

// Tensor power of the n-dimensional vector representation: basis indexed by
// the tuples (i_1, ..., i_k) in {1..n}^k in lexicographic order.
class TensorSpace {
public:
    TensorSpace(int n, int k);

    int values() const { return n_; }
    int factors() const { return k_; }
    std::size_t dim() const { return dim_; }

    std::vector<int> tuple(std::size_t index) const;
    std::size_t index(const std::vector<int>& t) const;
    // Multiplicity vector of the values 1..n (the gl_n weight of the tuple).
    Weight weight(std::size_t index) const;

private:
    int n_, k_;
    std::size_t dim_;
};

// Exact square matrix over Q(q), acting on column vectors.
class DenseOperator {
public:
    explicit DenseOperator(std::size_t dim); // zero matrix
    static DenseOperator identity(std::size_t dim);
    static DenseOperator scalar(std::size_t dim, const Scalar& c);

    std::size_t dim() const { return dim_; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }

    bool is_zero() const;
    bool operator==(const DenseOperator& o) const;

    DenseOperator& operator+=(const DenseOperator& o);
    DenseOperator& operator-=(const DenseOperator& o);
    friend DenseOperator operator+(DenseOperator a, const DenseOperator& b) { return a += b; }
    friend DenseOperator operator-(DenseOperator a, const DenseOperator& b) { return a -= b; }
    DenseOperator scaled(const Scalar& c) const;

    // Row-parallel product and the serial reference it is checked against.
    DenseOperator mul(const DenseOperator& o) const;
    DenseOperator mul_serial(const DenseOperator& o) const;
    friend DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
        return a.mul(b);
    }
    DenseOperator power(long e) const; // e >= 0

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    std::size_t rank() const;
    // Basis of the right kernel, one column vector per basis element.
    std::vector<std::vector<Scalar>> kernel() const;
    DenseOperator inverse() const; // DivisionByZero if singular

private:
    std::size_t dim_;
    std::vector<Scalar> a_; // row-major
};

// Exact rank and right-kernel basis of a rectangular matrix given as rows.
std::size_t rank_of(std::vector<std::vector<Scalar>> rows);
std::vector<std::vector<Scalar>> kernel_basis(std::vector<std::vector<Scalar>> rows,
                                              std::size_t cols);

// The braiding of V (x) V: v_i(x)v_i -> q v_i(x)v_i; v_i(x)v_j -> v_j(x)v_i for
// i<j; v_i(x)v_j -> v_j(x)v_i + (q-q^{-1}) v_i(x)v_j for i>j.
DenseOperator r_hat(int n);

// r_hat on the adjacent factor pair (p, p+1) of V^{(x)k}, 1 <= p <= k-1.
DenseOperator adjacent_braiding(int n, int k, int p);

// sigma_i and Y_i on V^{(x)k}, indexed relative to the rightmost factor:
// sigma_i braids the pair (k-i, k-i+1); Y_i braids factor k-i+1 around
// everything to its right (so Y_1 = id).  1 <= i <= k-1 for sigma, 1 <= i <= k
// for Y.
DenseOperator sigma_op(int n, int k, int i);
DenseOperator y_op(int n, int k, int i);

// The six defining families of the affine braid action on V^{(x)k}:
// commuting sigmas, the Yang-Baxter braid, sigma_i Y_i sigma_i = Y_{i+1},
// distant sigma/Y commutation, sigma_i Y_i Y_{i+1} = Y_{i+1} Y_i sigma_i, and
// commuting Ys.
VerificationReport verify_braid_relations(int n, int k);

// The affine Hecke relations of H_{k+1} under T_i := q sigma_i, X_i := Y_i,
// q0 := q^2, each as an exact matrix identity on V^{(x)(k+1)}.
VerificationReport verify_hecke_rep(int n, int k);

// Exact projector family onto the generalized q^e-eigenspaces of Y for the
// supplied exponent list.  Throws IncompleteSpectrum when the kernels of
// (Y - q^e)^dim do not fill the space.
struct SpectralDecomposition {
    std::vector<long> exponents;
    std::vector<DenseOperator> projectors;
    std::vector<std::size_t> ranks;
};
SpectralDecomposition spectral_projectors(const DenseOperator& y,
                                          const std::vector<long>& exponents);
DenseOperator pr_projector(const DenseOperator& y, long exponent,
                           const std::vector<long>& candidates);

// Weyl-filtration multiset of V^{(x)m} (iterated one-box Pieri steps from the
// empty weight) and the Weyl dimension of one class.
std::map<Weight, long> weyl_filtration(int n, int m);
mpz_class weyl_dim(const Weight& kappa);

// Every generalized eigen-exponent of Y_{m+1} on V (x) V^{(x)m}: twice the
// content of each dominant addable box over the filtration classes.
std::vector<long> content_exponents(int n, int m);

// The projector realizing E_a on V (x) V^{(x)m}: the generalized
// q^{2(a-1)}-eigenspace of Y_{m+1} (zero when that family is empty), plus the
// K0-side rank prediction it must match.
DenseOperator e_a_projector(int n, int m, long a);
mpz_class e_a_rank_prediction(int n, int m, long a);

// Rank of the image of the signed quasi-idempotent under T_i := q sigma_i,
// i.e. the dimension of the k-th quantum exterior power inside V^{(x)k}.
std::size_t antisym_rank(int n, int k);

// Checks that q sigma_1 preserves the joint generalized eigenspace of
// (X_1, X_2) at (q^{2(a-1)}, q^{2(a-1)}) inside V (x) V (x) V^{(x)m}.
VerificationReport e2_invariance_check(int n, int m, long a);

} // namespace qcat
