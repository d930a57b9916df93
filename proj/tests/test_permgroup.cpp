#include "doctest.h"

#include <map>
#include <numeric>

#include "qcat/errors.hpp"
#include "qcat/permutation.hpp"

using namespace qcat;

TEST_CASE("permutation composition and inverse") {
    Permutation id = Permutation::identity(3);
    Permutation s1 = Permutation::transposition(3, 1);
    Permutation s2 = Permutation::transposition(3, 2);

    CHECK(id * s1 == s1);
    CHECK(s1 * id == s1);
    CHECK((s1 * s1).is_identity());

    // s1 s2 is the 3-cycle 0 -> 1 -> 2 -> 0 (text form "2 3 1")
    Permutation c = s1 * s2;
    CHECK(c(0) == 1);
    CHECK(c(1) == 2);
    CHECK(c(2) == 0);
    CHECK(c.image() == std::vector<int>{1, 2, 0});
    CHECK(c.to_string() == "2 3 1");

    CHECK((c * c.inverse()).is_identity());
    CHECK((c.inverse() * c).is_identity());

    Permutation u = Permutation::identity(4);
    CHECK_THROWS_AS(s1 * u, DomainError);
}

TEST_CASE("length counts inversions") {
    CHECK(Permutation::identity(5).length() == 0);
    CHECK(Permutation::parse("3 2 1").length() == 3);  // longest element of S3
    CHECK(Permutation::parse("4 3 2 1").length() == 6);
    CHECK(Permutation::parse("2 1 4 3").length() == 2);
}

TEST_CASE("reduced words multiply back") {
    for (const Permutation& w : all_permutations(4)) {
        std::vector<int> word = w.reduced_word();
        CHECK(word.size() == w.length());
        Permutation acc = Permutation::identity(4);
        for (int i : word) acc = acc * Permutation::transposition(4, i);
        CHECK(acc == w);
    }
}

TEST_CASE("length changes by one under simple reflections") {
    for (const Permutation& w : all_permutations(4)) {
        for (int i = 1; i <= 3; ++i) {
            Permutation ws = w * Permutation::transposition(4, i);
            long diff = (long)ws.length() - (long)w.length();
            CHECK((diff == 1 || diff == -1));
        }
    }
}

TEST_CASE("enumeration") {
    CHECK(all_permutations(1).size() == 1);
    CHECK(all_permutations(1)[0].is_identity());
    CHECK(all_permutations(3).size() == 6);

    std::vector<Permutation> s4 = all_permutations(4);
    CHECK(s4.size() == 24);
    std::size_t total_length = 0;
    for (const Permutation& w : s4) total_length += w.length();
    CHECK(total_length == 72);

    // distinctness
    std::map<std::vector<int>, int> seen;
    for (const Permutation& w : s4) seen[w.image()]++;
    CHECK(seen.size() == 24);

    CHECK_THROWS_AS(all_permutations(9), ResourceLimit);
}

TEST_CASE("all reduced words are Matsumoto-complete for small cases") {
    // s1 s2 s1 = s2 s1 s2: the longest element of S3 has exactly two words
    Permutation w0 = Permutation::parse("3 2 1");
    auto words = w0.all_reduced_words();
    CHECK(words.size() == 2);
    for (const auto& word : words) {
        Permutation acc = Permutation::identity(3);
        for (int i : word) acc = acc * Permutation::transposition(3, i);
        CHECK(acc == w0);
        CHECK(word.size() == 3);
    }
    // identity has the single empty word
    CHECK(Permutation::identity(3).all_reduced_words().size() == 1);
    // longest element of S4 has 16 reduced words
    CHECK(Permutation::parse("4 3 2 1").all_reduced_words().size() == 16);
}

TEST_CASE("ascent detection") {
    Permutation w = Permutation::parse("2 3 1");
    // one-line 2 3 1: w(1)=2 < w(2)=3 so ascent at 1; w(2)=3 > w(3)=1 descent at 2
    CHECK(w.has_right_ascent(1));
    CHECK(!w.has_right_ascent(2));
}

TEST_CASE("parse and to_string round trip") {
    for (const Permutation& w : all_permutations(4)) {
        CHECK(Permutation::parse(w.to_string()) == w);
    }
    CHECK(Permutation::parse("3 1 2").image() == std::vector<int>{2, 0, 1});
    CHECK_THROWS_AS(Permutation::parse("1 1 2"), ParseError);
    CHECK_THROWS_AS(Permutation::parse("1 5 2"), ParseError);
    CHECK_THROWS_AS(Permutation::parse(""), ParseError);
    CHECK_THROWS_AS(Permutation::parse("1 two 3"), ParseError);
}
