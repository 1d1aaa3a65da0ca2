#include "systolic/hyptrig.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "systolic/numeric.hpp"

namespace systolic {

void check_side_length(double x, const char* name) {
    if (!std::isfinite(x) || x < kMinSideLength || x > kMaxSideLength)
        throw std::domain_error(std::string(name) + " must lie in [1e-8, 50], got " +
                                std::to_string(x));
}

namespace {

// Side between x and y whose opposite alternating side is opp. Writing the
// acosh argument as 1 + u with
//   u = (cosh opp + cosh(x - y)) / (sinh x sinh y)
// uses cosh x cosh y - sinh x sinh y = cosh(x - y) to cancel exactly, so no
// digits are lost when the hexagon is close to degenerate.
double side_between(double opp, double x, double y) {
    const double u = (std::cosh(opp) + std::cosh(x - y)) / (std::sinh(x) * std::sinh(y));
    return acosh1p(u);
}

// The cosine rule rearranged without cancellation:
//   2 sinh^2(gamma/2) sinh a sinh b = cosh c + cosh(a - b).
// The raw form sh a sh b ch gamma - ch a ch b loses every digit once the
// sides approach the top of the admissible range.
double rotation_residual(double a, double b, double c, double gamma) {
    const double sg = std::sinh(gamma / 2.0);
    const double lhs = 2.0 * sg * sg * std::sinh(a) * std::sinh(b);
    const double rhs = std::cosh(c) + std::cosh(a - b);
    return std::abs(lhs - rhs) / std::max(1.0, rhs);
}

}  // namespace

RightHexagon solve_hexagon(double a, double b, double c) {
    check_side_length(a, "a");
    check_side_length(b, "b");
    check_side_length(c, "c");
    RightHexagon hex{};
    hex.a = a;
    hex.b = b;
    hex.c = c;
    hex.gamma = side_between(c, a, b);
    hex.alpha = side_between(a, b, c);
    hex.beta = side_between(b, c, a);
    return hex;
}

double hexagon_residual(const RightHexagon& hex) {
    double r = rotation_residual(hex.a, hex.b, hex.c, hex.gamma);
    r = std::max(r, rotation_residual(hex.b, hex.c, hex.a, hex.alpha));
    r = std::max(r, rotation_residual(hex.c, hex.a, hex.b, hex.beta));
    return r;
}

double lemma1_margin(const RightHexagon& hex) {
    if (!(hex.a >= hex.b && hex.a >= hex.c))
        throw ordering_error("lemma1_margin: requires a >= b and a >= c; reorder the sides");
    return 0.5 - std::sinh(hex.gamma / 2.0) * std::sinh(hex.b / 2.0);
}

double lemma2_indicator(double b, double c, double alpha) {
    check_side_length(b, "b");
    check_side_length(c, "c");
    check_side_length(alpha, "alpha");
    const double s = std::sinh(alpha / 2.0);
    return s * s * std::tanh(b) * std::tanh(c) - 1.0;
}

double lemma2_side_gap(double b, double c, double alpha) {
    check_side_length(b, "b");
    check_side_length(c, "c");
    check_side_length(alpha, "alpha");
    const double cosh_a =
        std::sinh(b) * std::sinh(c) * std::cosh(alpha) - std::cosh(b) * std::cosh(c);
    const double a = cosh_a > 1.0 ? acosh1p(cosh_a - 1.0) : 0.0;
    return a - (b + c);
}

}  // namespace systolic
