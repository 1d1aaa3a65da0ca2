#include "systolic/poincare.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "systolic/constants.hpp"
#include "systolic/numeric.hpp"

namespace systolic {

namespace {

void check_sigma(double sigma) {
    if (!std::isfinite(sigma) || sigma <= 0.0)
        throw std::domain_error("sigma must be positive and finite");
}

void check_bound_param(double l) {
    if (!std::isfinite(l) || l <= 0.0)
        throw std::domain_error("l must be positive and finite");
}

double term(const SurfaceGroup& g, double sigma, const Isometry& m) {
    return std::exp(-sigma * distance(g.basepoint, apply(m, g.basepoint)));
}

}  // namespace

std::uint64_t count_elements(int depth) {
    check_depth(depth);
    std::uint64_t pow3 = 1;
    for (int i = 0; i < depth; ++i) pow3 *= 3;
    return 2 * (pow3 - 1);
}

std::optional<double> bound_pants(double l, double sigma) {
    check_bound_param(l);
    const double x = std::exp(-sigma * l / 2.0);
    const double den = 1.0 - x - 2.0 * x * x;
    if (!(den > 0.0)) return std::nullopt;
    return (4.0 * x + 8.0 * x * x) / den;
}

std::optional<double> bound_torus(double l, double sigma) {
    check_bound_param(l);
    const double x = std::exp(-sigma * l / 2.0);
    const double quartic = ((4.0 * x - 2.0) * x + 1.0) * x * x + 2.0 * x - 1.0;
    if (!(quartic < 0.0)) return std::nullopt;
    return (1.0 + 3.0 * x * x) / -quartic;
}

double delta_bound(SurfaceKind kind, double l) {
    check_bound_param(l);
    if (kind == SurfaceKind::pants) return 2.0 * std::log(2.0) / l;
    return -2.0 * std::log(quartic_root()) / l;
}

double poincare_sum(const SurfaceGroup& g, double sigma, int depth) {
    check_sigma(sigma);
    check_depth(depth);
    const auto gens = generator_matrices(g);

    std::array<double, 4> first{};
    for (Letter l = 0; l < 4; ++l) first[l] = term(g, sigma, gens[l]);

    NeumaierSum total;
    if (depth == 1) {
        for (Letter l = 0; l < 4; ++l) total.add(first[l]);
        return total.value();
    }

    const auto prefixes = two_letter_prefixes();
    std::array<NeumaierSum, 12> partial;
    std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(dynamic, 1)
    for (int t = 0; t < 12; ++t) {
        try {
            visit_prefix_subtree(gens, prefixes[t], depth,
                                 [&](const Letter*, int, const Isometry& m) {
                                     partial[t].add(term(g, sigma, m));
                                 });
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    // Canonical order: each first letter's own term, then its three subtrees.
    for (Letter l = 0; l < 4; ++l) {
        total.add(first[l]);
        for (int j = 0; j < 3; ++j) total.add(partial[3 * l + j].value());
    }
    return total.value();
}

double poincare_sum_serial(const SurfaceGroup& g, double sigma, int depth) {
    check_sigma(sigma);
    check_depth(depth);
    NeumaierSum total;
    enumerate_elements(g, depth, [&](const Letter*, int, const Isometry& m) {
        total.add(term(g, sigma, m));
    });
    return total.value();
}

SeriesReport truncated_series(const SurfaceGroup& g, double sigma, int depth,
                              bool include_identity) {
    check_sigma(sigma);
    check_depth(depth);
    SeriesReport r;
    r.sigma = sigma;
    r.depth = depth;
    r.include_identity = include_identity;
    r.systole_floor = systole_floor(g, depth);
    r.partial_sum = (include_identity ? 1.0 : 0.0) + poincare_sum(g, sigma, depth);
    r.analytic_bound = g.kind == SurfaceKind::pants ? bound_pants(r.systole_floor, sigma)
                                                    : bound_torus(r.systole_floor, sigma);
    return r;
}

double max_safe_radius(const SurfaceGroup& g, int depth) {
    check_depth(depth);
    return systole_floor(g, depth) * depth / 2.0;
}

namespace {

std::vector<OrbitPoint> finalize_counts(std::span<const double> radii,
                                        std::vector<std::uint64_t> hist) {
    std::vector<OrbitPoint> out(radii.size());
    std::uint64_t running = 0;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        running += hist[i];
        out[i].radius = radii[i];
        out[i].count = running;
        out[i].ratio = running > 0 ? std::log(static_cast<double>(running)) / radii[i] : 0.0;
    }
    return out;
}

void check_radii(std::span<const double> radii, int depth, double safe) {
    if (radii.empty()) throw std::domain_error("radii must be nonempty");
    double prev = 0.0;
    for (double r : radii) {
        if (!std::isfinite(r) || r <= prev)
            throw std::domain_error("radii must be finite, positive and strictly increasing");
        prev = r;
    }
    if (radii.back() > safe + 1e-12)
        throw coverage_error("radius " + std::to_string(radii.back()) +
                                 " is not covered at depth " + std::to_string(depth) +
                                 "; maximal safe radius is " + std::to_string(safe),
                             safe);
}

// Index of the first radius >= d, or radii.size() when d exceeds them all.
std::size_t bucket_of(std::span<const double> radii, double d) {
    return static_cast<std::size_t>(
        std::lower_bound(radii.begin(), radii.end(), d) - radii.begin());
}

}  // namespace

std::vector<OrbitPoint> empirical_delta(const SurfaceGroup& g, std::span<const double> radii,
                                        int depth) {
    check_depth(depth);
    const double safe = max_safe_radius(g, depth);
    check_radii(radii, depth, safe);
    const auto gens = generator_matrices(g);
    const std::size_t nb = radii.size() + 1;

    std::vector<std::uint64_t> hist(nb, 0);
    for (Letter l = 0; l < 4; ++l)
        ++hist[bucket_of(radii, distance(g.basepoint, apply(gens[l], g.basepoint)))];

    if (depth >= 2) {
        const auto prefixes = two_letter_prefixes();
        std::array<std::vector<std::uint64_t>, 12> partial;
        std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(dynamic, 1)
        for (int t = 0; t < 12; ++t) {
            try {
                partial[t].assign(nb, 0);
                visit_prefix_subtree(gens, prefixes[t], depth,
                                     [&](const Letter*, int, const Isometry& m) {
                                         const double d =
                                             distance(g.basepoint, apply(m, g.basepoint));
                                         ++partial[t][bucket_of(radii, d)];
                                     });
            } catch (...) {
#pragma omp critical
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        for (const auto& h : partial)
            for (std::size_t i = 0; i < nb; ++i) hist[i] += h[i];
    }
    hist.pop_back();  // overflow bucket beyond the largest radius
    return finalize_counts(radii, std::move(hist));
}

std::vector<OrbitPoint> empirical_delta_serial(const SurfaceGroup& g,
                                               std::span<const double> radii, int depth) {
    check_depth(depth);
    const double safe = max_safe_radius(g, depth);
    check_radii(radii, depth, safe);
    std::vector<std::uint64_t> hist(radii.size() + 1, 0);
    enumerate_elements(g, depth, [&](const Letter*, int, const Isometry& m) {
        ++hist[bucket_of(radii, distance(g.basepoint, apply(m, g.basepoint)))];
    });
    hist.pop_back();
    return finalize_counts(radii, std::move(hist));
}

}  // namespace systolic
