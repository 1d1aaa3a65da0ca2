#pragma once

#include <array>
#include <variant>

#include "systolic/isometry.hpp"
#include "systolic/words.hpp"

namespace systolic {

inline constexpr double kMinBoundaryParam = 0.1;
inline constexpr double kMaxBoundaryParam = 20.0;

struct PantsParams {
    double l1, l2, l3;  // boundary geodesic lengths
};

struct TorusParams {
    double l;    // length of the cutting geodesic
    double tau;  // twist along it, canonical range (-l/2, l/2]
};

enum class SurfaceKind { pants, torus };

// Marked two-generator Fuchsian model of a three-holed sphere or one-holed
// torus, with the basepoint used by orbit sums.
struct SurfaceGroup {
    SurfaceKind kind;
    Isometry gen_a, gen_b;
    PlanePoint basepoint;
    std::variant<PantsParams, TorusParams> params;
};

// Generator matrices in enumeration-letter order: A, A^-1, B, B^-1.
std::array<Isometry, 4> generator_matrices(const SurfaceGroup& g);

// Three-holed sphere with boundary lengths (l1, l2, l3). gen_a translates by
// l1 along the imaginary axis; gen_b translates by l2 along the geodesic
// whose common perpendicular to that axis is the hexagon seam between the
// l1/2 and l2/2 sides, so |tr gen_a| = 2 cosh(l1/2), |tr gen_b| =
// 2 cosh(l2/2), |tr gen_a gen_b| = 2 cosh(l3/2). Basepoint: the foot (0, 1)
// of the seam perpendicular on gen_a's axis.
SurfaceGroup build_pants(const PantsParams& p);

// One-holed torus cut along a geodesic of length l with twist tau (folded
// into the canonical range). gen_a realizes the cutting geodesic on the
// imaginary axis; gen_b is the gluing across it, a translation by
// torus_seam_length(l) along the perpendicular unit half-circle, composed
// with the twist translation. The commutator realizes the boundary; its
// translation length does not depend on tau. Basepoint: the foot on gen_a's
// axis of the common perpendicular from the commutator's axis (the hexagon
// vertex where the boundary-to-cutting-curve seam lands).
SurfaceGroup build_torus(const TorusParams& p);

// Canonical seam of the torus gluing: max(l, 2 arcsinh(coth(l/2))). The
// second branch is the side-sum equality seam, at which the boundary is
// exactly twice the cutting curve; taking the max keeps the commutator
// hyperbolic over the whole parameter range and the boundary always at
// least twice the cutting curve.
double torus_seam_length(double l);

// Translation length of the commutator of build_torus(p).
double boundary_length_torus(const TorusParams& p);

struct SystoleEstimate {
    double length;
    Word word;  // lexicographically least among exact ties
};

// Minimum translation length over the cyclically reduced words of length
// <= depth, with a minimizing word. An upper bound for the systole, exact
// once the systolic word fits within depth. Deterministic under any worker
// scheduling.
SystoleEstimate systole_estimate(const SurfaceGroup& g, int depth);

// Single-pass reference implementation; agrees exactly with the partitioned
// kernel.
SystoleEstimate systole_estimate_serial(const SurfaceGroup& g, int depth);

struct Lemma3Report {
    double systole;
    double boundary;
    bool threshold_ok;   // systole estimate >= torus_threshold()
    bool conclusion_ok;  // boundary >= 2 systole - 1e-9
    Word systole_word;
};

// Boundary-doubling check for the one-holed torus: whenever the estimated
// systole clears torus_threshold(), the boundary must be at least twice it.
Lemma3Report lemma3_check(const TorusParams& p, int depth);

// 1/2 (cosh s / cosh(s/2) - 1) tanh(s/2) - 1: crosses zero at the systole
// value beyond which the boundary-doubling conclusion is forced.
double boundary_doubling_margin(double s);

// Unique positive root of boundary_doubling_margin, bisected on [1, 5] to
// 1e-10 after verifying a single monotone sign change. A published
// sufficient value is 2.696; the root itself is near 2.5496.
double torus_threshold();

// Displacement floor used by series bounds and orbit counting: the smallest
// boundary parameter for pants, the depth-limited systole estimate for the
// torus.
double systole_floor(const SurfaceGroup& g, int depth);

}  // namespace systolic
