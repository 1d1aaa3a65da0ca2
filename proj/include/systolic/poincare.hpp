#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "systolic/surfaces.hpp"

namespace systolic {

// Truncated orbit sum sum_g exp(-sigma d(x, g x)) over the words of length
// 1..depth, plus the identity term when included, paired with the closed-form
// bound available for the group's kind at the recorded displacement floor.
struct SeriesReport {
    double sigma = 0.0;
    int depth = 0;
    double partial_sum = 0.0;
    bool include_identity = false;
    std::optional<double> analytic_bound;  // empty: the bound diverges at this sigma
    double systole_floor = 0.0;
};

// Number of freely reduced words of length 1..depth: 2 (3^depth - 1).
std::uint64_t count_elements(int depth);

// Streamed enumeration of the group elements as (letters, length, matrix),
// in the lexicographic order fixed by visit_reduced_words.
template <class Fn>
void enumerate_elements(const SurfaceGroup& g, int depth, Fn&& fn) {
    visit_reduced_words(generator_matrices(g), depth, std::forward<Fn>(fn));
}

// (4x + 8x^2) / (1 - x - 2x^2) at x = e^{-sigma l/2}; empty once the
// denominator is not positive, i.e. e^{-sigma l/2} >= 1/2.
std::optional<double> bound_pants(double l, double sigma);

// (1 + 3x^2) / -(4x^4 - 2x^3 + x^2 + 2x - 1) at x = e^{-sigma l/2}; empty
// once the quartic is nonnegative. The denominator equals minus the quartic
// identically.
std::optional<double> bound_torus(double l, double sigma);

// Critical-exponent upper bound: 2 ln 2 / l for pants, -2 ln(x*) / l for the
// torus with x* the positive quartic root (-2 ln x* = 1.7233..., below the
// published sufficient constant 1.73).
double delta_bound(SurfaceKind kind, double l);

// Nontrivial-element sum by canonical prefix partition (OpenMP workers,
// fixed-order compensated reduction: bitwise stable for any worker count).
double poincare_sum(const SurfaceGroup& g, double sigma, int depth);

// Single-pass reference sum in pure lexicographic order; matches the
// partitioned kernel to 1e-12.
double poincare_sum_serial(const SurfaceGroup& g, double sigma, int depth);

SeriesReport truncated_series(const SurfaceGroup& g, double sigma, int depth,
                              bool include_identity);

struct OrbitPoint {
    double radius;
    std::uint64_t count;  // nontrivial elements with d(x, g x) <= radius
    double ratio;         // ln(count)/radius, 0 when the count is 0
};

// Largest radius the enumeration provably covers: systole_floor * depth / 2.
double max_safe_radius(const SurfaceGroup& g, int depth);

// Orbit-counting estimate of the critical exponent at the given radii
// (strictly increasing, each within the safe radius).
std::vector<OrbitPoint> empirical_delta(const SurfaceGroup& g, std::span<const double> radii,
                                        int depth);
std::vector<OrbitPoint> empirical_delta_serial(const SurfaceGroup& g,
                                               std::span<const double> radii, int depth);

}  // namespace systolic
