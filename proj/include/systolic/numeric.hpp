#pragma once

#include <cmath>

namespace systolic {

// arccosh(1 + u) without the cancellation that costs half the significant
// digits when the plain acosh argument sits near 1.
inline double acosh1p(double u) {
    if (u < 0.0) u = 0.0;
    return std::log1p(u + std::sqrt(u * (u + 2.0)));
}

// Neumaier-compensated accumulator. The order of add() calls is part of the
// result contract: deterministic sums must feed terms in a fixed order.
struct NeumaierSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

}  // namespace systolic
