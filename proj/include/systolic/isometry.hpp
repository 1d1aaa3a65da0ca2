#pragma once

#include <utility>

#include "systolic/errors.hpp"

namespace systolic {

inline constexpr double kDetTol = 1e-12;
inline constexpr double kTraceBand = 1e-9;   // |tr| vs 2 classification band
inline constexpr double kIdentityTol = 1e-12;
inline constexpr int kRenormChain = 32;      // compositions between det renormalizations

// Orientation-preserving isometry of the upper half-plane as a real 2x2
// matrix with determinant 1, sign-normalized: tr > 0, or first nonzero entry
// (row-major) positive when the trace vanishes.
struct Isometry {
    double m11 = 1.0, m12 = 0.0;
    double m21 = 0.0, m22 = 1.0;
    int chain = 0;  // compositions since the determinant was last renormalized
};

struct PlanePoint {
    double x = 0.0;
    double y = 1.0;  // strictly positive
};

enum class IsometryType { identity, elliptic, parabolic, hyperbolic };

const char* type_name(IsometryType t);

Isometry identity_isometry();

// z -> e^t z: translation by |t| along the imaginary axis (upward for t > 0).
Isometry axial(double t);

// Translation by |d| along the unit half-circle, the geodesic orthogonal to
// the imaginary axis at (0, 1).
Isometry perp_axial(double d);

double trace(const Isometry& g);
double determinant(const Isometry& g);
Isometry sign_normalized(Isometry g);

Isometry compose(const Isometry& g, const Isometry& h);
Isometry inverse(const Isometry& g);
Isometry conjugate(const Isometry& g, const Isometry& h);   // h g h^-1
Isometry commutator(const Isometry& g, const Isometry& h);  // g h g^-1 h^-1

// By |tr| against 2 with the kTraceBand tolerance; identity when every entry
// deviates from the identity matrix by less than kIdentityTol.
IsometryType classify(const Isometry& g);

// 2 arccosh(|tr|/2). Throws classification_error unless classify(g) is
// hyperbolic; near-parabolic input (|tr| within the band of 2) is rejected
// rather than guessed, the formula being ill-conditioned there.
double translation_length(const Isometry& g);

PlanePoint apply(const Isometry& g, const PlanePoint& p);

// arccosh(1 + ((px-qx)^2 + (py-qy)^2) / (2 py qy))
double distance(const PlanePoint& p, const PlanePoint& q);

// Boundary fixed points of a hyperbolic isometry, smaller first. Throws
// internal_error when the axis passes through infinity.
std::pair<double, double> fixed_points(const Isometry& g);

}  // namespace systolic
