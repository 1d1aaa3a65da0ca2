#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "systolic/hyptrig.hpp"
#include "systolic/rng.hpp"

using namespace systolic;

TEST_CASE("equilateral hexagon hits the opposite-side equality exactly") {
    const auto hex = solve_hexagon(2.0, 2.0, 2.0);
    // sinh(gamma/2) sinh(b/2) = 1/2 at a = b = c
    CHECK(std::sinh(hex.gamma / 2) * std::sinh(1.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(hex.gamma == doctest::Approx(0.82713690163855678).epsilon(1e-12));
    CHECK(hex.gamma == hex.alpha);
    CHECK(hex.gamma == hex.beta);
    CHECK(hexagon_residual(hex) < kTolHex);
}

TEST_CASE("cyclic rotation of the inputs permutes the computed sides") {
    const auto h1 = solve_hexagon(1.3, 2.1, 0.7);
    const auto h2 = solve_hexagon(2.1, 0.7, 1.3);
    CHECK(h2.gamma == doctest::Approx(h1.alpha).epsilon(1e-12));
    CHECK(h2.alpha == doctest::Approx(h1.beta).epsilon(1e-12));
    CHECK(h2.beta == doctest::Approx(h1.gamma).epsilon(1e-12));
}

TEST_CASE("side alpha of (2,1,1) is 2 arcsinh(1/tanh 1)") {
    const auto hex = solve_hexagon(2.0, 1.0, 1.0);
    const double expected = 2.0 * std::asinh(1.0 / std::tanh(1.0));  // the stated closed form
    CHECK(expected == doctest::Approx(2.1727477060199817).epsilon(1e-14));
    CHECK(hex.alpha == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("input guards") {
    CHECK_THROWS_AS(solve_hexagon(0.0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(solve_hexagon(1.0, -2.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(solve_hexagon(1.0, 1.0, 1e-9), std::domain_error);
    CHECK_THROWS_AS(solve_hexagon(51.0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(solve_hexagon(std::nan(""), 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(solve_hexagon(INFINITY, 1.0, 1.0), std::domain_error);
    // Extremes of the admissible window still produce a consistent hexagon.
    CHECK(hexagon_residual(solve_hexagon(2e-8, 1.0, 1.0)) < kTolHex);
    CHECK(hexagon_residual(solve_hexagon(50.0, 50.0, 50.0)) < kTolHex);
}

TEST_CASE("hexagon residual stays below tolerance on random triples") {
    Pcg32 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const auto hex = solve_hexagon(rng.uniform(0.05, 8.0), rng.uniform(0.05, 8.0),
                                       rng.uniform(0.05, 8.0));
        CHECK(hexagon_residual(hex) < kTolHex);
    }
}

TEST_CASE("lemma 1 margin: equality case, strict case, ordering guard") {
    CHECK(std::abs(lemma1_margin(solve_hexagon(2, 2, 2))) < 1e-12);
    CHECK(std::abs(lemma1_margin(solve_hexagon(0.7, 0.7, 0.7))) < 1e-12);
    CHECK(std::abs(lemma1_margin(solve_hexagon(5, 5, 5))) < 1e-12);
    CHECK(lemma1_margin(solve_hexagon(3, 1, 1)) > 0.0);
    CHECK_THROWS_AS(lemma1_margin(solve_hexagon(1, 3, 1)), ordering_error);
    CHECK_THROWS_AS(lemma1_margin(solve_hexagon(1, 1, 3)), ordering_error);
}

TEST_CASE("lemma 1 margin is nonnegative over a seeded sweep") {
    Pcg32 rng(0);
    for (int i = 0; i < 20000; ++i) {
        double a = rng.uniform(0.2, 5.0);
        double b = rng.uniform(0.2, 5.0);
        double c = rng.uniform(0.2, 5.0);
        if (b > a) std::swap(a, b);
        if (c > a) std::swap(a, c);
        const double margin = lemma1_margin(solve_hexagon(a, b, c));
        CHECK(margin >= -1e-12);
        // Equality only happens when the alternating sides coincide.
        if (std::abs(margin) < 1e-12)
            CHECK(std::max(std::abs(a - b), std::abs(a - c)) < 1e-6);
    }
}

TEST_CASE("lemma 2 indicator vanishes exactly at the side-sum boundary") {
    const double alpha = 2.0 * std::asinh(1.0 / std::tanh(1.0));
    CHECK(std::abs(lemma2_indicator(1.0, 1.0, alpha)) < 1e-12);
    // The induced side then equals b + c = 2.
    const double cosh_a = std::sinh(1.0) * std::sinh(1.0) * std::cosh(alpha) -
                          std::cosh(1.0) * std::cosh(1.0);
    CHECK(cosh_a == doctest::Approx(std::cosh(2.0)).epsilon(1e-9));
    CHECK(std::abs(lemma2_side_gap(1.0, 1.0, alpha)) < 1e-9);
}

TEST_CASE("lemma 2 indicator near alpha -> 0 approaches -1") {
    CHECK(lemma2_indicator(1.0, 1.0, 1e-6) == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(lemma2_side_gap(1.0, 1.0, 1e-6) < 0.0);
    CHECK_THROWS_AS(lemma2_indicator(0.0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(lemma2_indicator(1.0, 1.0, -1.0), std::domain_error);
}

TEST_CASE("lemma 2 sign equivalence on a coarse grid") {
    const int n = 15;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const double b = 0.2 + (5.0 - 0.2) * i / (n - 1);
                const double c = 0.2 + (5.0 - 0.2) * j / (n - 1);
                const double alpha = 0.2 + (5.0 - 0.2) * k / (n - 1);
                const double gap = lemma2_side_gap(b, c, alpha);
                if (std::abs(gap) <= 1e-9) continue;
                const double ind = lemma2_indicator(b, c, alpha);
                CHECK((ind >= 0.0) == (gap >= 0.0));
            }
}

TEST_CASE("computed seam shrinks as either adjacent side grows") {
    const double h = 1e-3;
    for (double a : {0.5, 1.0, 2.0, 4.0})
        for (double b : {0.5, 1.0, 2.0, 4.0})
            for (double c : {0.5, 1.0, 2.0, 4.0}) {
                const double base = solve_hexagon(a, b, c).gamma;
                CHECK(solve_hexagon(a + h, b, c).gamma < base);
                CHECK(solve_hexagon(a, b + h, c).gamma < base);
            }
}
