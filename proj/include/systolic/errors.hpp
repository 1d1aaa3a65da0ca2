#pragma once

#include <stdexcept>
#include <string>

namespace systolic {

// A caller passed sides/points violating an ordering precondition.
struct ordering_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An isometry is not of the type the operation requires.
struct classification_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A surface-group construction failed (invalid parameter region).
struct construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bisection bracket does not straddle a sign change.
struct bracket_error : std::runtime_error {
    bracket_error(std::string constant, const std::string& what)
        : std::runtime_error(what), constant_name(std::move(constant)) {}
    std::string constant_name;
};

// A requested orbit-count radius is not covered by the enumeration depth.
struct coverage_error : std::runtime_error {
    coverage_error(const std::string& what, double max_safe)
        : std::runtime_error(what), max_safe_radius(max_safe) {}
    double max_safe_radius;
};

// Numerical self-consistency failure; indicates a bug, not bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace systolic
