#pragma once

#include "systolic/errors.hpp"

namespace systolic {

// Residual tolerance for the hexagon cosine rule; pure algebraic identities
// use the tighter kTolAlgebra.
inline constexpr double kTolHex = 1e-9;
inline constexpr double kTolAlgebra = 1e-12;

// Side lengths outside this window either underflow sinh (degenerate
// hexagon) or push cosh past the range where the cosine rule keeps nine
// significant digits. Rejected rather than saturated.
inline constexpr double kMinSideLength = 1e-8;
inline constexpr double kMaxSideLength = 50.0;

// Right-angled hyperbolic hexagon with sides in the cyclic order
// a, gamma, b, alpha, c, beta (alpha lies between b and c). The alternating
// triple (a, b, c) determines the hexagon through the cosine rule
//
//   cosh c = sinh a sinh b cosh gamma - cosh a cosh b
//
// and its two cyclic rotations.
struct RightHexagon {
    double a, gamma, b, alpha, c, beta;
};

// Throws std::domain_error unless x is a usable side length.
void check_side_length(double x, const char* name);

// The unique right-angled hexagon with alternating sides (a, b, c).
RightHexagon solve_hexagon(double a, double b, double c);

// Largest relative residual of the cosine rule over the three rotations;
// at most kTolHex for a valid hexagon.
double hexagon_residual(const RightHexagon& hex);

// 1/2 - sinh(gamma/2) sinh(b/2). Nonnegative whenever a is the largest of
// the alternating sides, and zero exactly at a = b = c. Throws
// ordering_error unless a >= b and a >= c; callers reorder first.
double lemma1_margin(const RightHexagon& hex);

// sinh^2(alpha/2) tanh(b) tanh(c) - 1. Shares its sign with a - (b + c),
// where a is the alternating side opposite alpha.
double lemma2_indicator(double b, double c, double alpha);

// a - (b + c) for the side a induced by (b, c, alpha) through the cosine
// rule: the independent comparison used by the sign sweeps. When the rule
// yields cosh a < 1 no such side exists and the gap is reported as -(b + c).
double lemma2_side_gap(double b, double c, double alpha);

}  // namespace systolic
