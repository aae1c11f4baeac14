#include <doctest.h>

#include "bsmg/poly.hpp"

using namespace bsmg;

namespace {

MultiPoly var(int i, std::uint32_t p = 0, int nv = 3) { return MultiPoly::variable(p, nv, i); }

} // namespace

TEST_CASE("basic polynomial arithmetic") {
    MultiPoly x0 = var(0), x1 = var(1);
    CHECK((x0 * x0).homogeneous_degree() == 4);
    CHECK((x0 + (-x0)).is_zero());
    MultiPoly prod = (x0 + x1) * (x0 - x1);
    CHECK(prod == x0 * x0 - x1 * x1);
}

TEST_CASE("homogeneous degree bookkeeping") {
    MultiPoly x0 = var(0), x1 = var(1);
    CHECK((x0 * x1).homogeneous_degree() == 4);
    CHECK(MultiPoly::constant(0, 3, FieldScalar::rational(3)).homogeneous_degree() == 0);
    CHECK_THROWS_AS((x0 + x0 * x0).homogeneous_degree(), NotHomogeneous);
    CHECK_THROWS_AS(MultiPoly::zero(0, 3).homogeneous_degree(), ZeroPolynomial);
}

TEST_CASE("exact division by a linear form") {
    MultiPoly x0 = var(0), x1 = var(1);
    MultiPoly f = x0 * x0 - x1 * x1;
    CHECK(f.divide_exact_by_linear(x0 - x1) == x0 + x1);
    CHECK(MultiPoly::zero(0, 3).divide_exact_by_linear(x0).is_zero());
    CHECK_THROWS_AS((x0 * x1 + x1 * x1).divide_exact_by_linear(x0), NotDivisible);
}

TEST_CASE("division round-trips on random homogeneous polynomials") {
    std::uint64_t state = 4242;
    auto next = [&state]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<std::int64_t>((state >> 35) % 7) - 3;
    };
    for (std::uint32_t p : {0u, 5u}) {
        for (int trial = 0; trial < 200; ++trial) {
            MultiPoly ell(p, 3);
            while (ell.is_zero())
                ell = MultiPoly::linear_form(p, 3,
                                             {FieldScalar::of_int(p, next()),
                                              FieldScalar::of_int(p, next()),
                                              FieldScalar::of_int(p, next())});
            MultiPoly f(p, 3);
            for (int t = 0; t < 4; ++t) {
                std::uint64_t key = 0;
                int budget = 3;
                for (int v = 0; v < 3; ++v) {
                    int e = static_cast<int>((next() + 3) % (budget + 1));
                    key |= static_cast<std::uint64_t>(e) << (8 * v);
                    budget -= e;
                }
                f.add_term(key, FieldScalar::of_int(p, next()));
            }
            MultiPoly prod = f * ell;
            if (prod.is_zero()) continue;
            CHECK(prod.divide_exact_by_linear(ell) == f);
        }
    }
}

TEST_CASE("ring axioms on random polynomials") {
    std::uint64_t state = 777;
    auto next = [&state]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<std::int64_t>((state >> 35) % 7) - 3;
    };
    auto random_poly = [&](std::uint32_t p) {
        MultiPoly f(p, 3);
        for (int t = 0; t < 3; ++t) {
            std::uint64_t key = 0;
            for (int v = 0; v < 3; ++v)
                key |= static_cast<std::uint64_t>((next() + 3) % 3) << (8 * v);
            f.add_term(key, FieldScalar::of_int(p, next()));
        }
        return f;
    };
    for (std::uint32_t p : {0u, 7u}) {
        for (int i = 0; i < 100; ++i) {
            MultiPoly a = random_poly(p), b = random_poly(p), c = random_poly(p);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("field mismatch is rejected") {
    MultiPoly a(0, 3), b(5, 3), c(0, 2);
    CHECK_THROWS_AS(a + b, FieldMismatch);
    CHECK_THROWS_AS(a * c, FieldMismatch);
}
