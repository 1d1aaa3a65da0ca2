#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "systolic/constants.hpp"
#include "systolic/poincare.hpp"
#include "systolic/rng.hpp"
#include "systolic/surfaces.hpp"

using namespace systolic;

TEST_CASE("pants bound: divergence boundary and closed-form values") {
    const double l = 4.0 * std::log(2.0);
    // At sigma l / 2 = ln 2 the denominator 1 - x - 2x^2 vanishes.
    CHECK(!bound_pants(l, 2.0 * std::log(2.0) / l).has_value());
    CHECK(!bound_pants(l, 0.25).has_value());
    const auto b = bound_pants(l, 0.6);
    REQUIRE(b.has_value());
    CHECK(*b == doctest::Approx(17.529037830296296).epsilon(1e-12));
    // Independent re-evaluation of the displayed quotient.
    const double x = std::exp(-0.6 * l / 2.0);
    CHECK(*b == doctest::Approx((4 * x + 8 * x * x) / (1 - x - 2 * x * x)).epsilon(1e-14));
    CHECK(*bound_pants(l, 50.0) < 1e-10);  // all exponentials vanish
    CHECK_THROWS_AS(bound_pants(-1.0, 0.6), std::domain_error);
}

TEST_CASE("torus bound: quartic root boundary, identity, large-sigma limit") {
    const double xstar = quartic_root();
    const double l = 4.0;
    // sigma placed exactly at the root: divergent marker.
    const double sigma_star = -2.0 * std::log(xstar) / l;
    CHECK(!bound_torus(l, sigma_star).has_value());
    CHECK(!bound_torus(l, sigma_star - 1e-6).has_value());
    CHECK(bound_torus(l, sigma_star + 1e-6).has_value());
    // Denominator is exactly minus the quartic.
    Pcg32 rng(41);
    for (int i = 0; i < 1000; ++i) {
        const double x = rng.uniform(1e-6, 1.0 - 1e-6);
        const double quartic = 4 * std::pow(x, 4) - 2 * std::pow(x, 3) + x * x + 2 * x - 1;
        const double den = 1 - 2 * x - x * x + 2 * std::pow(x, 3) - 4 * std::pow(x, 4);
        CHECK(den + quartic == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    }
    const auto big = bound_torus(l, 60.0);
    REQUIRE(big.has_value());
    CHECK(*big == doctest::Approx(1.0).epsilon(1e-12));  // only the constant survives
    CHECK(*bound_torus(4.0, 0.475) == doctest::Approx(14.043986504567).epsilon(1e-10));
}

TEST_CASE("delta bounds for both kinds") {
    CHECK(delta_bound(SurfaceKind::pants, 4.0 * std::log(2.0)) ==
          doctest::Approx(0.5).epsilon(1e-12));
    const double torus_coeff = -2.0 * std::log(quartic_root());
    CHECK(torus_coeff == doctest::Approx(1.7233324141453189).epsilon(1e-10));
    CHECK(torus_coeff <= 1.73);
    CHECK(delta_bound(SurfaceKind::torus, 3.46) <= 0.5);
    CHECK(delta_bound(SurfaceKind::torus, 1.0) == doctest::Approx(torus_coeff).epsilon(1e-14));
}

TEST_CASE("truncated series: decay, monotonicity in depth, guards") {
    const auto g = build_pants({3.0, 3.0, 3.0});
    const auto tiny = truncated_series(g, 50.0, 4, false);
    CHECK(tiny.partial_sum < 1e-10);

    double prev = 0.0;
    for (int d = 2; d <= 9; ++d) {
        const double s = poincare_sum(g, 0.9, d);
        CHECK(s >= prev);  // positive terms only
        prev = s;
    }
    CHECK_THROWS_AS(truncated_series(g, 0.0, 4, false), std::domain_error);
    CHECK_THROWS_AS(truncated_series(g, -1.0, 4, false), std::domain_error);
    CHECK_THROWS_AS(truncated_series(g, 1.0, 0, false), std::domain_error);

    const auto with_id = truncated_series(g, 0.9, 6, true);
    const auto without = truncated_series(g, 0.9, 6, false);
    CHECK(with_id.partial_sum == doctest::Approx(without.partial_sum + 1.0).epsilon(1e-13));
    CHECK(with_id.systole_floor == 3.0);
}

TEST_CASE("series majorization on pants test groups") {
    const double l = 4.0 * std::log(2.0);
    const auto g = build_pants({l, l, l});
    for (double sigma : {0.55, 0.6, 0.8, 1.2})
        for (int depth : {6, 10}) {
            const auto rep = truncated_series(g, sigma, depth, false);
            REQUIRE(rep.analytic_bound.has_value());
            CHECK(rep.partial_sum <= *rep.analytic_bound + 1e-9);
        }
    // A second floor: asymmetric pants, floor = min parameter.
    const auto g2 = build_pants({3.0, 4.0, 5.0});
    const auto rep2 = truncated_series(g2, 0.8, 10, false);
    CHECK(rep2.systole_floor == 3.0);
    REQUIRE(rep2.analytic_bound.has_value());
    CHECK(rep2.partial_sum <= *rep2.analytic_bound + 1e-9);
}

TEST_CASE("series majorization on the torus with both identity conventions") {
    const auto g = build_torus({4.0, 0.0});
    const double floor = systole_floor(g, 10);
    const double sigma = 1.9 / floor;
    const auto with_id = truncated_series(g, sigma, 10, true);
    REQUIRE(with_id.analytic_bound.has_value());
    CHECK(with_id.partial_sum <= *with_id.analytic_bound + 1e-9);
    const auto without = truncated_series(g, sigma, 10, false);
    CHECK(without.partial_sum <= *without.analytic_bound + 1e-9);
    CHECK(without.partial_sum < with_id.partial_sum);
}

TEST_CASE("partitioned sum reproduces the serial reference at any worker count") {
    const auto g = build_torus({3.5, 0.6});
    const double serial = poincare_sum_serial(g, 0.7, 9);
    std::vector<double> runs;
    for (int threads : {1, 2, 5, 8}) {
#ifdef _OPENMP
        omp_set_num_threads(threads);
#else
        (void)threads;
#endif
        runs.push_back(poincare_sum(g, 0.7, 9));
    }
    for (double r : runs) {
        CHECK(r == runs.front());  // bitwise stable across worker counts
        CHECK(std::abs(r - serial) <= 1e-12 * std::max(1.0, std::abs(serial)));
    }
}

TEST_CASE("orbit counting: monotone counts, zero radius bucket, coverage guard") {
    const auto g = build_pants({4.0, 4.0, 4.0});
    const std::vector<double> radii{1.0, 8.0, 16.0, 24.0};
    const auto pts = empirical_delta(g, radii, 12);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0].count == 0);  // below the minimal displacement
    CHECK(pts[0].ratio == 0.0);
    for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i].count >= pts[i - 1].count);
    CHECK(pts[3].count > 0);

    // Serial reference agrees exactly.
    const auto ser = empirical_delta_serial(g, radii, 12);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(pts[i].count == ser[i].count);
        CHECK(pts[i].ratio == ser[i].ratio);
    }

    CHECK(max_safe_radius(g, 12) == doctest::Approx(24.0));
    CHECK_THROWS_AS(empirical_delta(g, std::vector<double>{30.0}, 12), coverage_error);
    CHECK_THROWS_AS(empirical_delta(g, std::vector<double>{2.0, 2.0}, 12), std::domain_error);
    CHECK_THROWS_AS(empirical_delta(g, std::vector<double>{}, 12), std::domain_error);
    try {
        empirical_delta(g, std::vector<double>{30.0}, 12);
    } catch (const coverage_error& e) {
        CHECK(e.max_safe_radius == doctest::Approx(24.0));
    }
}

TEST_CASE("empirical exponent ratio is robust to moving the basepoint") {
    const auto g = build_pants({4.0, 4.0, 4.0});
    SurfaceGroup moved = g;
    moved.basepoint = PlanePoint{0.0, std::exp(1.0)};  // one unit along the axis, still in the core
    const std::vector<double> radii{20.0};
    const double r1 = empirical_delta(g, radii, 10)[0].ratio;
    const double r2 = empirical_delta(moved, radii, 10)[0].ratio;
    CHECK(r1 > 0.0);
    CHECK(std::abs(r1 - r2) < 0.05);
}

TEST_CASE("divergence boundaries line up with the exposed roots") {
    // Pants: denominator sign flips exactly at x = 1/2.
    const double l = 3.0;
    const double sigma_half = 2.0 * std::log(2.0) / l;
    CHECK(!bound_pants(l, sigma_half - 1e-8).has_value());
    CHECK(bound_pants(l, sigma_half + 1e-8).has_value());
    // Torus: at the quartic root exposed by the constants module.
    const double sigma_torus = -2.0 * std::log(quartic_root()) / l;
    CHECK(!bound_torus(l, sigma_torus - 1e-8).has_value());
    CHECK(bound_torus(l, sigma_torus + 1e-8).has_value());
}
