#include "doctest.h"

#include <algorithm>

#include "qcat/errors.hpp"
#include "qcat/tensor_ops.hpp"

using namespace qcat;

namespace {

const ScalarMode G = ScalarMode::generic();

Scalar q(long e) { return Scalar::q_power(e, G); }

long binom(long m, long k) {
    if (k < 0 || k > m) return 0;
    long r = 1;
    for (long j = 1; j <= k; ++j) r = r * (m - k + j) / j;
    return r;
}

} // namespace

TEST_CASE("tensor space indexing") {
    TensorSpace ts(3, 2);
    CHECK(ts.dim() == 9);
    CHECK(ts.values() == 3);
    CHECK(ts.factors() == 2);
    // lexicographic: (1,1), (1,2), ..., (3,3)
    CHECK(ts.tuple(0) == std::vector<int>{1, 1});
    CHECK(ts.tuple(1) == std::vector<int>{1, 2});
    CHECK(ts.tuple(8) == std::vector<int>{3, 3});
    for (std::size_t i = 0; i < ts.dim(); ++i) {
        CHECK(ts.index(ts.tuple(i)) == i);
    }
    CHECK(ts.weight(ts.index({2, 1})) == Weight{1, 1, 0});
    CHECK(ts.weight(ts.index({3, 3})) == Weight{0, 0, 2});
    CHECK_THROWS_AS(ts.index({1, 4}), DomainError);
    CHECK_THROWS_AS(TensorSpace(2, 13), ResourceLimit);  // 8192 > dimension cap
}

TEST_CASE("dense operator arithmetic") {
    DenseOperator a(2), b(2);
    a.at(0, 0) = q(1);
    a.at(0, 1) = Scalar::one(G);
    a.at(1, 1) = q(-1);
    b.at(0, 0) = Scalar::one(G);
    b.at(1, 0) = q(2);

    DenseOperator id = DenseOperator::identity(2);
    CHECK(a * id == a);
    CHECK(id * a == a);
    CHECK((a - a).is_zero());
    CHECK(a * b == a.mul_serial(b));
    CHECK((a + b) * b == a * b + b * b);
    CHECK(a.power(3) == a * a * a);
    CHECK(a.power(0) == id);

    // apply on a column vector
    std::vector<Scalar> v = {Scalar::one(G), q(1)};
    std::vector<Scalar> av = a.apply(v);
    CHECK(av[0] == q(1) + q(1));
    CHECK(av[1] == Scalar::one(G));

    CHECK(DenseOperator::scalar(2, q(3)) == id.scaled(q(3)));
}

TEST_CASE("rank, kernel, inverse") {
    DenseOperator a(3);
    a.at(0, 0) = Scalar::one(G);
    a.at(1, 1) = q(1);
    // row 2 zero: rank 2, kernel dim 1
    CHECK(a.rank() == 2);
    auto ker = a.kernel();
    REQUIRE(ker.size() == 1);
    // kernel vector is killed by a
    auto img = a.apply(ker[0]);
    for (const Scalar& c : img) CHECK(c.is_zero());
    CHECK_THROWS_AS(a.inverse(), DivisionByZero);

    a.at(2, 2) = q(-2) + Scalar::one(G);
    CHECK(a.rank() == 3);
    DenseOperator ainv = a.inverse();
    CHECK(a * ainv == DenseOperator::identity(3));
    CHECK(ainv * a == DenseOperator::identity(3));

    CHECK(DenseOperator(4).rank() == 0);
    CHECK(DenseOperator(4).kernel().size() == 4);
}

TEST_CASE("braiding matrix entries") {
    // n = 1: the single basis vector scales by q
    DenseOperator r1 = r_hat(1);
    CHECK(r1.dim() == 1);
    CHECK(r1.at(0, 0) == q(1));

    DenseOperator r = r_hat(2);
    TensorSpace ts(2, 2);
    std::size_t i11 = ts.index({1, 1}), i12 = ts.index({1, 2});
    std::size_t i21 = ts.index({2, 1}), i22 = ts.index({2, 2});
    // diagonal tuples scale by q
    CHECK(r.at(i11, i11) == q(1));
    CHECK(r.at(i22, i22) == q(1));
    // v1(x)v2 -> v2(x)v1
    CHECK(r.at(i21, i12) == Scalar::one(G));
    CHECK(r.at(i12, i12).is_zero());
    // v2(x)v1 -> v1(x)v2 + (q - q^-1) v2(x)v1
    CHECK(r.at(i12, i21) == Scalar::one(G));
    CHECK(r.at(i21, i21) == q(1) - q(-1));

    // multiset support: matrix entries vanish unless row and column tuples
    // are rearrangements of each other
    DenseOperator r3 = r_hat(3);
    TensorSpace t3(3, 2);
    for (std::size_t i = 0; i < r3.dim(); ++i) {
        for (std::size_t j = 0; j < r3.dim(); ++j) {
            if (r3.at(i, j).is_zero()) continue;
            auto a = t3.tuple(i), b = t3.tuple(j);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            CHECK(a == b);
        }
    }
}

TEST_CASE("hecke quadratic for the braiding") {
    for (int n = 1; n <= 3; ++n) {
        DenseOperator r = r_hat(n);
        DenseOperator id = DenseOperator::identity(r.dim());
        // r^2 = (q - q^-1) r + id
        CHECK(r * r == r.scaled(q(1) - q(-1)) + id);
        // eigenvalue multiplicities: the q eigenspace is the symmetric square,
        // dim n(n+1)/2; the -q^-1 eigenspace the exterior square, n(n-1)/2
        DenseOperator sym = r - id.scaled(q(1));
        DenseOperator alt = r + id.scaled(q(-1));
        CHECK(long(r.dim()) - long(sym.rank()) == n * (n + 1) / 2);
        CHECK(long(r.dim()) - long(alt.rank()) == n * (n - 1) / 2);
    }
}

TEST_CASE("adjacent braiding and operator indexing") {
    // b_p acts on the (p, p+1) pair: on V^(x)3 with n = 2 check b_1 vs b_2
    int n = 2, k = 3;
    TensorSpace ts(n, k);
    DenseOperator b1 = adjacent_braiding(n, k, 1);
    DenseOperator b2 = adjacent_braiding(n, k, 2);
    // (2,1,1): b_1 swaps the first pair -> (1,2,1); b_2 fixes ((1,1) diagonal, q)
    std::size_t c211 = ts.index({2, 1, 1});
    CHECK(b1.at(ts.index({1, 2, 1}), c211) == Scalar::one(G));
    CHECK(b1.at(c211, c211) == q(1) - q(-1));
    CHECK(b2.at(c211, c211) == q(1));

    // sigma_i = b_{k-i}
    CHECK(sigma_op(n, k, 1) == b2);
    CHECK(sigma_op(n, k, 2) == b1);

    // Y_1 = id; Y on two factors is the full double braiding r_hat^2
    CHECK(y_op(n, 2, 1) == DenseOperator::identity(4));
    CHECK(y_op(n, 2, 2) == r_hat(n) * r_hat(n));

    CHECK_THROWS_AS(adjacent_braiding(n, k, 0), DomainError);
    CHECK_THROWS_AS(adjacent_braiding(n, k, 3), DomainError);
    CHECK_THROWS_AS(sigma_op(n, k, 3), DomainError);
    CHECK_THROWS_AS(y_op(n, k, 4), DomainError);
}

TEST_CASE("braid relation families") {
    for (int n = 2; n <= 3; ++n) {
        for (int k = 2; k <= 3; ++k) {
            VerificationReport rep = verify_braid_relations(n, k);
            CHECK(rep.all_pass());
            CHECK(rep.fail_count() == 0);
        }
    }
}

TEST_CASE("hecke representation relations") {
    VerificationReport rep = verify_hecke_rep(2, 2);
    CHECK(rep.all_pass());
    VerificationReport rep3 = verify_hecke_rep(3, 2);
    CHECK(rep3.all_pass());
}

TEST_CASE("spectral projectors") {
    // Y_2 on V(x)V for n = 2: exponents 2*content over addable boxes of (1)
    // and of (0): contents 1 and -1 give q^2 and q^-2, plus ... compute from
    // content_exponents
    std::vector<long> exps = content_exponents(2, 1);
    std::sort(exps.begin(), exps.end());
    CHECK(exps == std::vector<long>{-2, 2});

    DenseOperator y = y_op(2, 2, 2);
    SpectralDecomposition sd = spectral_projectors(y, exps);
    REQUIRE(sd.projectors.size() == 2);
    std::size_t total = 0;
    DenseOperator sum(y.dim());
    for (std::size_t t = 0; t < sd.projectors.size(); ++t) {
        const DenseOperator& p = sd.projectors[t];
        CHECK(p * p == p);                 // idempotent
        CHECK(p * y == y * p);             // commutes with Y
        CHECK(p.rank() == sd.ranks[t]);
        total += sd.ranks[t];
        sum += p;
        for (std::size_t u = 0; u < t; ++u) {
            CHECK((sd.projectors[u] * p).is_zero());  // mutually orthogonal
        }
    }
    CHECK(total == y.dim());
    CHECK(sum == DenseOperator::identity(y.dim()));  // complete

    // ranks: q^2 space is the symmetric square (dim 3), q^-2 the exterior (1)
    CHECK(sd.ranks[std::size_t(std::find(exps.begin(), exps.end(), 2) - exps.begin())] == 3);

    // a wrong exponent list leaves a gap
    CHECK_THROWS_AS(spectral_projectors(y, std::vector<long>{2}), IncompleteSpectrum);
    CHECK_THROWS_AS(spectral_projectors(y, std::vector<long>{2, 2, -2}), DomainError);

    // pr_projector picks one member of the family
    DenseOperator p2 = pr_projector(y, 2, exps);
    CHECK(p2 * p2 == p2);
    CHECK(p2.rank() == 3);
}

TEST_CASE("weyl filtration and dimensions") {
    // V^(x)2 for gl_2: (2,0) + (1,1)
    auto f2 = weyl_filtration(2, 2);
    CHECK(f2.size() == 2);
    CHECK(f2.at({2, 0}) == 1);
    CHECK(f2.at({1, 1}) == 1);
    // V^(x)3 for gl_2: (3,0) once, (2,1) twice
    auto f3 = weyl_filtration(2, 3);
    CHECK(f3.at({3, 0}) == 1);
    CHECK(f3.at({2, 1}) == 2);

    CHECK(weyl_dim({2, 0}) == 3);
    CHECK(weyl_dim({1, 1}) == 1);
    CHECK(weyl_dim({2, 1, 0}) == 8);   // adjoint of gl_3
    CHECK(weyl_dim({1, 0, 0}) == 3);

    // dimensions add up to n^m
    for (int n = 2; n <= 3; ++n) {
        for (int m = 1; m <= 3; ++m) {
            mpz_class total = 0;
            for (const auto& [kappa, mult] : weyl_filtration(n, m)) {
                total += mult * weyl_dim(kappa);
            }
            mpz_class expect = 1;
            for (int t = 0; t < m; ++t) expect *= n;
            CHECK(total == expect);
        }
    }
}

TEST_CASE("e_a projector ranks match the combinatorial prediction") {
    // n = 2, m = 1: Y_2 on V(x)V; a = 2 picks content 1 (rank 3), a = 0 picks
    // content -1 (rank 1), a = 1 picks nothing
    CHECK(e_a_rank_prediction(2, 1, 2) == 3);
    CHECK(e_a_rank_prediction(2, 1, 0) == 1);
    CHECK(e_a_rank_prediction(2, 1, 1) == 0);
    CHECK(e_a_projector(2, 1, 2).rank() == 3);
    CHECK(e_a_projector(2, 1, 0).rank() == 1);
    CHECK(e_a_projector(2, 1, 1).is_zero());

    for (int m = 0; m <= 2; ++m) {
        mpz_class total = 0;
        for (long a = -3; a <= 4; ++a) {
            mpz_class predicted = e_a_rank_prediction(2, m, a);
            CHECK(mpz_class(long(e_a_projector(2, m, a).rank())) == predicted);
            total += predicted;
        }
        // the E_a eigenspaces decompose all of V^(x)(m+1)
        mpz_class expect = 1;
        for (int t = 0; t <= m; ++t) expect *= 2;
        CHECK(total == expect);
    }
}

TEST_CASE("antisymmetrizer ranks are quantum exterior powers") {
    for (int n = 2; n <= 3; ++n) {
        for (int k = 1; k <= 3; ++k) {
            CHECK(long(antisym_rank(n, k)) == binom(n, k));
        }
    }
    CHECK(antisym_rank(2, 3) == 0);  // no 3-forms in two dimensions
}

TEST_CASE("pair invariance of the braiding on joint eigenspaces") {
    for (long a : {0L, 1L, 2L}) {
        VerificationReport rep = e2_invariance_check(2, 1, a);
        CHECK(rep.all_pass());
    }
}

TEST_CASE("parallel product matches the serial reference") {
    DenseOperator y = y_op(2, 4, 3);
    DenseOperator b = adjacent_braiding(2, 4, 2);
    CHECK(y.mul(b) == y.mul_serial(b));
    CHECK(b.mul(y) == b.mul_serial(y));
}
