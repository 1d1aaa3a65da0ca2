#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace systolic {

// How a computed constant relates to its published counterpart: exact
// agreement, a printed rounding, or a deliberately slack sufficient bound.
// Conflating the three would mask which published values are tight.
enum class Relation { equals, paper_is_rounded, paper_is_sufficient_upper };

const char* relation_name(Relation r);

struct ConstantReport {
    std::string name;
    double computed = 0.0;
    double paper_value = 0.0;
    double bracket_lo = 0.0, bracket_hi = 0.0;  // sign-change bracket of the defining root
    double tolerance = 0.0;
    Relation relation = Relation::equals;
    bool ok = false;
};

// Plain bisection to within tol. Requires a sign change on [lo, hi];
// otherwise throws bracket_error carrying `what` as the constant name. Takes
// at most ceil(log2((hi - lo)/tol)) halvings.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol,
              const std::string& what = "bisect");

// First sign-change cell of f on [lo, hi] scanning at the given step;
// bracket_error when none exists.
std::pair<double, double> scan_bracket(const std::function<double(double)>& f, double lo,
                                       double hi, double step, const std::string& what);

// Positive root of 4x^4 - 2x^3 + x^2 + 2x - 1 on (0, 1), bisected to 1e-12
// and cached. Near 0.42246.
double quartic_root();

// Every published numeric constant recomputed from its defining equation, in
// a fixed report order suitable for golden-file comparison.
std::vector<ConstantReport> verify_all();

}  // namespace systolic
