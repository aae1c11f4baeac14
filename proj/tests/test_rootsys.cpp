#include <doctest.h>

#include "bsmg/rootsys.hpp"

using namespace bsmg;

TEST_CASE("Cartan matrices") {
    RootSystem a2('A', 2, false);
    CHECK(a2.cartan() == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
    RootSystem a1('A', 1, false);
    CHECK(a1.cartan() == std::vector<std::vector<int>>{{2}});
    CHECK_THROWS_AS(RootSystem('Z', 3, false), UnsupportedType);
    CHECK_THROWS_AS(RootSystem('F', 3, false), UnsupportedType);
}

TEST_CASE("positive roots by closure") {
    RootSystem a2('A', 2, false);
    CHECK(a2.positive_roots().size() == 3);
    CHECK(a2.highest_root() == std::vector<int>{1, 1});
    RootSystem a1('A', 1, false);
    CHECK(a1.positive_roots().size() == 1);
    RootSystem a3('A', 3, false);
    CHECK(a3.positive_roots().size() == 6);
    RootSystem b2('B', 2, false);
    CHECK(b2.positive_roots().size() == 4);
    RootSystem g2('G', 2, false);
    CHECK(g2.positive_roots().size() == 6);
    RootSystem d4('D', 4, false);
    CHECK(d4.positive_roots().size() == 12);
}

TEST_CASE("pairing ignores levels") {
    RootSystem a2('A', 2, true);
    AffineRoot a1 = a2.simple_root(1), al2 = a2.simple_root(2);
    CHECK(a2.pairing_prime(a1, a1) == 2);
    CHECK(a2.pairing_prime(al2, a1) == -1);
    AffineRoot lifted = a2.make_root({1, 0}, 5);
    CHECK(a2.pairing_prime(lifted, al2) == -1);
}

TEST_CASE("reflection matches the affine rule") {
    RootSystem a2('A', 2, false);
    AffineRoot a1 = a2.simple_root(1), al2 = a2.simple_root(2);
    CHECK(a2.reflect(al2, a1) == a2.make_root({1, 1}, 0));
    CHECK(a2.reflect(a1, a1) == a2.make_root({-1, 0}, 0));

    RootSystem aff('A', 1, true);
    AffineRoot alpha = aff.simple_root(1);
    AffineRoot neg_shift = aff.make_root({-1}, 1);
    CHECK(aff.reflect(neg_shift, alpha) == aff.make_root({1}, 1));
}

TEST_CASE("affine simple system and positivity") {
    RootSystem aff('A', 1, true);
    auto simples = aff.affine_simple_system();
    REQUIRE(simples.size() == 2);
    CHECK(simples[0] == aff.make_root({-1}, 1));
    CHECK(simples[1] == aff.simple_root(1));
    CHECK(aff.is_positive(aff.make_root({-1}, 1)));
    CHECK(aff.is_positive(aff.simple_root(1)));
    CHECK_FALSE(aff.is_positive(aff.make_root({-1}, 0)));
}

TEST_CASE("reflection is an involution and preserves the pairing") {
    RootSystem aff('A', 2, true);
    std::vector<AffineRoot> sample;
    for (const auto& beta : aff.positive_roots())
        for (int level : {-1, 0, 2}) sample.push_back(aff.make_root(beta, level));
    for (const auto& alpha : aff.affine_simple_system())
        for (const auto& beta : sample) {
            CHECK(aff.reflect(aff.reflect(beta, alpha), alpha) == beta);
            for (const auto& gamma : sample) {
                CHECK(aff.pairing_prime(aff.reflect(beta, alpha), aff.reflect(gamma, alpha)) ==
                      aff.pairing_prime(beta, gamma));
            }
        }
}

TEST_CASE("low-level positive affine roots decompose over the simple system") {
    RootSystem aff('A', 1, true);
    // Brute force: every positive level <= 3 root is a nonnegative sum of
    // (alpha,0) and (-alpha,1).
    for (int level = 0; level <= 3; ++level)
        for (int sign : {1, -1}) {
            if (level == 0 && sign < 0) continue;
            AffineRoot beta = aff.make_root({sign}, level);
            // coefficients: beta = a*(alpha,0) + b*(-alpha,1) with a-b = sign, b = level
            int b = level, a = sign + level;
            CHECK(a >= 0);
            CHECK(b >= 0);
        }
}

TEST_CASE("weight coordinates come from Cartan columns") {
    RootSystem a2('A', 2, false);
    CHECK(a2.simple_root(1).weight_coords == std::vector<int>{2, -1, 0});
    CHECK(a2.make_root({1, 1}, 0).weight_coords == std::vector<int>{1, 1, 0});
    RootSystem aff('A', 1, true);
    CHECK(aff.make_root({-1}, 1).weight_coords == std::vector<int>{-2, 1});
}

TEST_CASE("root printing") {
    RootSystem a2('A', 2, false);
    CHECK(a2.make_root({1, 1}, 0).str() == "[1,1]+0d");
    RootSystem aff('A', 1, true);
    CHECK(aff.make_root({-1}, 2).str() == "[-1]+2d");
}
