#include "doctest.h"

#include "qcat/errors.hpp"
#include "qcat/scalar.hpp"

using namespace qcat;

namespace {

Scalar q(long e, ScalarMode m = ScalarMode::generic()) { return Scalar::q_power(e, m); }

LaurentPoly lp(std::initializer_list<std::pair<long, long>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, mpq_class(c));
    return p;
}

} // namespace

TEST_CASE("laurent poly basics") {
    LaurentPoly p = lp({{2, 1}, {0, 2}, {-2, 1}});
    CHECK(p.term_count() == 3);
    CHECK(p.coeff(2) == 1);
    CHECK(p.coeff(1) == 0);
    CHECK(p.min_exp() == -2);
    CHECK(p.max_exp() == 2);
    CHECK(p.render() == "q^2 + 2 + q^-2");

    // cancellation removes the stored term entirely
    LaurentPoly z = p - p;
    CHECK(z.is_zero());
    CHECK(z.term_count() == 0);

    p.add_term(0, mpq_class(-2));
    CHECK(p.coeff(0) == 0);
    CHECK(p.term_count() == 2);
}

TEST_CASE("laurent poly arithmetic laws") {
    LaurentPoly a = lp({{1, 1}, {-1, -1}});  // q - q^-1
    LaurentPoly b = lp({{3, 2}, {0, 5}});
    LaurentPoly c = lp({{-2, 7}, {1, 1}});

    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a.shifted(3) == a * LaurentPoly::monomial(3));
    CHECK(a.scaled(mpq_class(-2)) == a * LaurentPoly::constant(mpq_class(-2)));
    CHECK((-a) + a == LaurentPoly());
}

TEST_CASE("laurent eval") {
    LaurentPoly p = lp({{2, 1}, {0, -3}, {-1, 2}});
    // at x = 2: 4 - 3 + 1 = 2
    CHECK(p.eval(mpq_class(2)) == mpq_class(2));
    CHECK(p.eval(mpq_class(1)) == mpq_class(0));
}

TEST_CASE("scalar generic field arithmetic") {
    ScalarMode g = ScalarMode::generic();
    Scalar x = q(1) - q(-1);
    CHECK(x * x.inverse() == Scalar::one(g));
    CHECK(Scalar::zero(g) / (q(1) + Scalar::one(g)) == Scalar::zero(g));
    CHECK_THROWS_AS(x / Scalar::zero(g), DivisionByZero);
    CHECK((x - x).is_zero());
    CHECK((x / x).is_one());

    // canonical form makes equality syntactic: (q^2-1)/(q-1) == q+1
    Scalar lhs = (q(2) - Scalar::one(g)) / (q(1) - Scalar::one(g));
    CHECK(lhs == q(1) + Scalar::one(g));

    // fractions with negative exponents normalize to a genuine-poly denominator
    Scalar y = Scalar::one(g) / (q(-1) + q(-3));
    Scalar z = q(3) / (q(2) + Scalar::one(g));
    CHECK(y == z);
}

TEST_CASE("scalar pow and rational accessors") {
    ScalarMode g = ScalarMode::generic();
    Scalar x = q(1) + q(-1);
    CHECK(x.pow(0).is_one());
    CHECK(x.pow(3) == x * x * x);
    CHECK(x.pow(-2) == (x * x).inverse());
    CHECK(Scalar::rational(mpq_class(3, 4), g).as_rational() == mpq_class(3, 4));
    CHECK(!x.as_rational().has_value());
    CHECK(x.eval(mpq_class(2)) == mpq_class(5, 2));
}

TEST_CASE("cyclotomic polynomials") {
    // Phi_3 = q^2+q+1, Phi_4 = q^2+1, Phi_6 = q^2-q+1, Phi_12 = q^4-q^2+1
    CHECK(cyclotomic(3) == DensePoly{1, 1, 1});
    CHECK(cyclotomic(4) == DensePoly{1, 0, 1});
    CHECK(cyclotomic(6) == DensePoly{1, -1, 1});
    CHECK(cyclotomic(12) == DensePoly{1, 0, -1, 0, 1});
    // product of Phi_d over d | 5 is q^5 - 1
    DensePoly prod = dense_mul(cyclotomic(1), cyclotomic(5));
    CHECK(prod == DensePoly{-1, 0, 0, 0, 0, 1});
}

TEST_CASE("root of unity mode reduction") {
    ScalarMode m3 = ScalarMode::root_of_unity(3);
    // q^3 = 1 in Q[q]/Phi_3
    CHECK(q(3, m3) == Scalar::one(m3));
    CHECK(q(-1, m3) == q(2, m3));
    // q^2 + q + 1 = 0
    CHECK((q(2, m3) + q(1, m3) + Scalar::one(m3)).is_zero());
    // residue vector has length phi(3) = 2
    CHECK(q(1, m3).residue().size() == 2);

    ScalarMode m4 = ScalarMode::root_of_unity(4);
    CHECK((q(2, m4) + Scalar::one(m4)).is_zero());
    CHECK(q(1, m4).inverse() == q(3, m4));

    CHECK_THROWS_AS(ScalarMode::root_of_unity(2), DomainError);
    CHECK_THROWS_AS(ScalarMode::root_of_unity(1), DomainError);
}

TEST_CASE("mode mismatch is rejected") {
    Scalar a = q(1);
    Scalar b = q(1, ScalarMode::root_of_unity(3));
    CHECK_THROWS_AS(a + b, ModeMismatch);
    CHECK_THROWS_AS(a * b, ModeMismatch);
}

TEST_CASE("quantum integers") {
    ScalarMode g = ScalarMode::generic();
    CHECK(quantum_integer(0, g).is_zero());
    CHECK(quantum_integer(1, g).is_one());
    CHECK(quantum_integer(2, g) == q(1) + q(-1));
    CHECK(quantum_integer(3, g) == q(2) + Scalar::one(g) + q(-2));

    // [m] at q = 1 equals m
    for (long m = 1; m <= 8; ++m) {
        CHECK(quantum_integer(m, g).eval(mpq_class(1)) == mpq_class(m));
    }
}

TEST_CASE("quantum factorial and binomial") {
    ScalarMode g = ScalarMode::generic();
    CHECK(quantum_factorial(0, g).is_one());
    CHECK(quantum_factorial(3, g) ==
          quantum_integer(3, g) * quantum_integer(2, g) * quantum_integer(1, g));

    // [4 choose 2] = q^4 + q^2 + 2 + q^-2 + q^-4
    Scalar b42 = quantum_binomial(4, 2, g);
    Scalar expect = q(4) + q(2) + Scalar::integer(2, g) + q(-2) + q(-4);
    CHECK(b42 == expect);

    // symmetry and edge cases
    for (long m = 0; m <= 6; ++m) {
        for (long k = 0; k <= m; ++k) {
            CHECK(quantum_binomial(m, k, g) == quantum_binomial(m, m - k, g));
        }
        CHECK(quantum_binomial(m, 0, g).is_one());
    }
    CHECK_THROWS_AS(quantum_binomial(2, 3, g), DomainError);
    CHECK_THROWS_AS(quantum_integer(-1, g), DomainError);
}

TEST_CASE("quantum integers at a root of unity") {
    for (long ell : {3L, 4L, 5L}) {
        ScalarMode m = ScalarMode::root_of_unity(ell);
        CHECK(quantum_integer(ell, m).is_zero());
    }
    // [m] = (q^{2m} - 1)/(q^m (q - q^-1)) vanishes iff ell | 2m, so for odd ell
    // nothing below [ell] dies; at even ell the first casualty is [ell/2]
    for (long ell : {3L, 5L, 7L}) {
        ScalarMode m = ScalarMode::root_of_unity(ell);
        for (long k = 1; k < ell; ++k) {
            CHECK(!quantum_integer(k, m).is_zero());
        }
    }
    ScalarMode m4 = ScalarMode::root_of_unity(4);
    CHECK(quantum_integer(2, m4).is_zero());
    CHECK(!quantum_integer(1, m4).is_zero());
    CHECK(!quantum_integer(3, m4).is_zero());
    // [3] = q^2 + 1 + q^-2 vanishes at a primitive cube root
    ScalarMode m3 = ScalarMode::root_of_unity(3);
    CHECK((q(2, m3) + Scalar::one(m3) + q(-2, m3)).is_zero());
    // binomials remain well defined: [4 choose 2] at ell=3 is the specialized
    // Laurent polynomial, here q^4+q^2+2+q^-2+q^-4 = 3q + 3q^2 + ... evaluate
    Scalar b = quantum_binomial(4, 2, m3);
    Scalar expect = q(4, m3) + q(2, m3) + Scalar::integer(2, m3) + q(-2, m3) + q(-4, m3);
    CHECK(b == expect);
}

TEST_CASE("scalar render and parse round trip") {
    ScalarMode g = ScalarMode::generic();
    Scalar vals[] = {
        Scalar::zero(g),
        Scalar::one(g),
        q(1) - q(-1),
        (q(3) + Scalar::integer(2, g)) / (q(1) + Scalar::one(g)),
        Scalar::rational(mpq_class(-7, 3), g),
        quantum_binomial(4, 2, g),
    };
    for (const Scalar& v : vals) {
        CHECK(Scalar::parse(v.render(), g) == v);
    }

    CHECK(Scalar::parse("q^2 + 2 - q^-2", g) == q(2) + Scalar::integer(2, g) - q(-2));
    CHECK(Scalar::parse("(q^3-1)/(q-1)", g) == q(2) + q(1) + Scalar::one(g));
    CHECK(Scalar::parse("q0^2", g, {"q0"}) == q(2));
    CHECK(Scalar::parse("3/4", g) == Scalar::rational(mpq_class(3, 4), g));
    CHECK_THROWS_AS(Scalar::parse("q +", g), ParseError);
    CHECK_THROWS_AS(Scalar::parse("(q", g), ParseError);
    CHECK_THROWS_AS(Scalar::parse("x + 1", g), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1/0", g), DivisionByZero);

    ScalarMode m3 = ScalarMode::root_of_unity(3);
    Scalar r = q(1, m3) + Scalar::integer(2, m3);
    CHECK(Scalar::parse(r.render(), m3) == r);
}
