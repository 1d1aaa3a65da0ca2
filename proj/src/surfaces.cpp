#include "systolic/surfaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "systolic/constants.hpp"
#include "systolic/hyptrig.hpp"
#include "systolic/numeric.hpp"

namespace systolic {

namespace {

void check_boundary_param(double x, const char* name) {
    if (!std::isfinite(x) || x < kMinBoundaryParam || x > kMaxBoundaryParam)
        throw std::domain_error(std::string(name) + " must lie in [0.1, 20], got " +
                                std::to_string(x));
}

void check_boundary_trace(const Isometry& g, double half_length, const char* which) {
    if (std::abs(std::abs(trace(g)) - 2.0 * std::cosh(half_length)) > 1e-9)
        throw construction_error(std::string("boundary trace mismatch for ") + which);
}

// Twist folded into (-l/2, l/2].
double fold_twist(double tau, double l) {
    double t = std::remainder(tau, l);
    if (t <= -l / 2.0) t = l / 2.0;
    return t;
}

}  // namespace

std::array<Isometry, 4> generator_matrices(const SurfaceGroup& g) {
    return {g.gen_a, inverse(g.gen_a), g.gen_b, inverse(g.gen_b)};
}

SurfaceGroup build_pants(const PantsParams& p) {
    check_boundary_param(p.l1, "l1");
    check_boundary_param(p.l2, "l2");
    check_boundary_param(p.l3, "l3");
    const RightHexagon hex = solve_hexagon(p.l1 / 2.0, p.l2 / 2.0, p.l3 / 2.0);
    // hex.gamma is the seam between the l1/2 and l2/2 sides: the common
    // perpendicular between the first two boundary axes.
    const Isometry seam = perp_axial(hex.gamma);
    SurfaceGroup g;
    g.kind = SurfaceKind::pants;
    g.gen_a = axial(p.l1);
    // Translating by -l2 in the conjugated frame orients the second boundary
    // so that tr(gen_a gen_b) = -2 cosh(l3/2).
    g.gen_b = compose(compose(seam, axial(-p.l2)), inverse(seam));
    g.basepoint = PlanePoint{0.0, 1.0};
    g.params = p;
    check_boundary_trace(g.gen_a, p.l1 / 2.0, "l1");
    check_boundary_trace(g.gen_b, p.l2 / 2.0, "l2");
    check_boundary_trace(compose(g.gen_a, g.gen_b), p.l3 / 2.0, "l3");
    return g;
}

double torus_seam_length(double l) {
    return std::max(l, 2.0 * std::asinh(1.0 / std::tanh(l / 2.0)));
}

SurfaceGroup build_torus(const TorusParams& p) {
    check_boundary_param(p.l, "l");
    if (!std::isfinite(p.tau)) throw std::domain_error("tau must be finite");
    const TorusParams folded{p.l, fold_twist(p.tau, p.l)};
    SurfaceGroup g;
    g.kind = SurfaceKind::torus;
    g.gen_a = axial(folded.l);
    g.gen_b = compose(axial(folded.tau), perp_axial(torus_seam_length(folded.l)));
    g.params = folded;
    const Isometry comm = commutator(g.gen_a, g.gen_b);
    if (classify(comm) != IsometryType::hyperbolic)
        throw construction_error("commutator is not hyperbolic: invalid torus parameters");
    const auto [fp1, fp2] = fixed_points(comm);
    const double pq = fp1 * fp2;
    if (!(pq > 0.0))
        throw construction_error("commutator axis meets the cutting axis: no basepoint foot");
    g.basepoint = PlanePoint{0.0, std::sqrt(pq)};
    return g;
}

double boundary_length_torus(const TorusParams& p) {
    const SurfaceGroup g = build_torus(p);
    return translation_length(commutator(g.gen_a, g.gen_b));
}

namespace {

// Running (length, word) minimum with a deterministic tie rule: strictly
// smaller length wins, exact ties go to the lexicographically smaller word.
// The outcome depends only on the candidate set, not on visit order.
struct MinCandidate {
    double length = std::numeric_limits<double>::infinity();
    std::vector<Letter> word;

    void offer(double len, const Letter* w, int n) {
        if (len > length) return;
        if (len == length && !std::lexicographical_compare(w, w + n, word.begin(), word.end()))
            return;
        length = len;
        word.assign(w, w + n);
    }

    void merge(const MinCandidate& o) {
        if (!o.word.empty()) offer(o.length, o.word.data(), static_cast<int>(o.word.size()));
    }
};

void offer_if_closed_geodesic(MinCandidate& best, const Letter* w, int n, const Isometry& m) {
    if (!cyclically_reduced(w, static_cast<std::size_t>(n))) return;
    const double t = std::abs(trace(m));
    if (t <= 2.0 + kTraceBand) return;  // not a closed geodesic representative
    best.offer(2.0 * acosh1p(t / 2.0 - 1.0), w, n);
}

SystoleEstimate systole_kernel(const SurfaceGroup& g, int depth, bool parallel) {
    check_depth(depth);
    const auto gens = generator_matrices(g);
    MinCandidate best;
    for (Letter l = 0; l < 4; ++l) offer_if_closed_geodesic(best, &l, 1, gens[l]);
    if (depth >= 2) {
        const auto prefixes = two_letter_prefixes();
        std::array<MinCandidate, 12> partial;
        if (parallel) {
            std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(dynamic, 1)
            for (int t = 0; t < 12; ++t) {
                try {
                    visit_prefix_subtree(gens, prefixes[t], depth,
                                         [&](const Letter* w, int n, const Isometry& m) {
                                             offer_if_closed_geodesic(partial[t], w, n, m);
                                         });
                } catch (...) {
#pragma omp critical
                    if (!err) err = std::current_exception();
                }
            }
            if (err) std::rethrow_exception(err);
        } else {
            for (int t = 0; t < 12; ++t) {
                visit_prefix_subtree(gens, prefixes[t], depth,
                                     [&](const Letter* w, int n, const Isometry& m) {
                                         offer_if_closed_geodesic(partial[t], w, n, m);
                                     });
            }
        }
        for (const auto& c : partial) best.merge(c);
    }
    if (best.word.empty()) throw internal_error("systole_estimate: no hyperbolic word found");
    return {best.length, Word{std::move(best.word)}};
}

}  // namespace

SystoleEstimate systole_estimate(const SurfaceGroup& g, int depth) {
    return systole_kernel(g, depth, true);
}

SystoleEstimate systole_estimate_serial(const SurfaceGroup& g, int depth) {
    check_depth(depth);
    const auto gens = generator_matrices(g);
    MinCandidate best;
    visit_reduced_words(gens, depth, [&](const Letter* w, int n, const Isometry& m) {
        offer_if_closed_geodesic(best, w, n, m);
    });
    if (best.word.empty()) throw internal_error("systole_estimate: no hyperbolic word found");
    return {best.length, Word{std::move(best.word)}};
}

Lemma3Report lemma3_check(const TorusParams& p, int depth) {
    const SurfaceGroup g = build_torus(p);
    SystoleEstimate est = systole_estimate(g, depth);
    const double boundary = translation_length(commutator(g.gen_a, g.gen_b));
    Lemma3Report r;
    r.systole = est.length;
    r.boundary = boundary;
    r.threshold_ok = est.length >= torus_threshold();
    r.conclusion_ok = boundary >= 2.0 * est.length - 1e-9;
    r.systole_word = std::move(est.word);
    return r;
}

double boundary_doubling_margin(double s) {
    return 0.5 * (std::cosh(s) / std::cosh(s / 2.0) - 1.0) * std::tanh(s / 2.0) - 1.0;
}

double torus_threshold() {
    static const double root = [] {
        // Verify one monotone sign change on [1, 5] before bisecting.
        const double step = 1e-2;
        int changes = 0;
        double lo = 1.0, hi = 5.0, blo = 0.0, bhi = 0.0;
        double prev = boundary_doubling_margin(lo);
        if (prev >= 0.0)
            throw bracket_error("separating_boundary_threshold", "margin not negative at s = 1");
        for (double x = lo + step; x < hi + step / 2.0; x += step) {
            const double cur = boundary_doubling_margin(std::min(x, hi));
            if ((prev < 0.0) != (cur < 0.0)) {
                ++changes;
                blo = x - step;
                bhi = std::min(x, hi);
            }
            prev = cur;
        }
        if (changes != 1)
            throw bracket_error("separating_boundary_threshold",
                                "expected exactly one sign change on [1, 5], found " +
                                    std::to_string(changes));
        return bisect([](double s) { return boundary_doubling_margin(s); }, blo, bhi, 1e-10,
                      "separating_boundary_threshold");
    }();
    return root;
}

double systole_floor(const SurfaceGroup& g, int depth) {
    if (g.kind == SurfaceKind::pants) {
        const auto& p = std::get<PantsParams>(g.params);
        return std::min({p.l1, p.l2, p.l3});
    }
    return systole_estimate(g, depth).length;
}

}  // namespace systolic
