#include "systolic/isometry.hpp"

#include <algorithm>
#include <cmath>

#include "systolic/numeric.hpp"

namespace systolic {

const char* type_name(IsometryType t) {
    switch (t) {
        case IsometryType::identity: return "identity";
        case IsometryType::elliptic: return "elliptic";
        case IsometryType::parabolic: return "parabolic";
        case IsometryType::hyperbolic: return "hyperbolic";
    }
    return "?";
}

Isometry identity_isometry() { return {}; }

Isometry axial(double t) {
    const double e = std::exp(t / 2.0);
    return {e, 0.0, 0.0, 1.0 / e, 0};
}

Isometry perp_axial(double d) {
    const double ch = std::cosh(d / 2.0);
    const double sh = std::sinh(d / 2.0);
    return {ch, sh, sh, ch, 0};
}

double trace(const Isometry& g) { return g.m11 + g.m22; }

double determinant(const Isometry& g) { return g.m11 * g.m22 - g.m12 * g.m21; }

Isometry sign_normalized(Isometry g) {
    const double tr = g.m11 + g.m22;
    bool flip = false;
    if (tr < -kIdentityTol) {
        flip = true;
    } else if (std::abs(tr) <= kIdentityTol) {
        for (double e : {g.m11, g.m12, g.m21, g.m22}) {
            if (e != 0.0) {
                flip = e < 0.0;
                break;
            }
        }
    }
    if (flip) {
        g.m11 = -g.m11;
        g.m12 = -g.m12;
        g.m21 = -g.m21;
        g.m22 = -g.m22;
    }
    return g;
}

namespace {

Isometry renormalized(Isometry g) {
    // For large-entry matrices the computed determinant is dominated by
    // cancellation noise while the true determinant is as accurate as the
    // entries themselves; rescale only when the measurement is meaningful.
    const double det = determinant(g);
    if (det > 0.5 && det < 2.0) {
        const double s = std::sqrt(det);
        g.m11 /= s;
        g.m12 /= s;
        g.m21 /= s;
        g.m22 /= s;
    }
    g.chain = 0;
    return g;
}

}  // namespace

Isometry compose(const Isometry& g, const Isometry& h) {
    Isometry r{g.m11 * h.m11 + g.m12 * h.m21, g.m11 * h.m12 + g.m12 * h.m22,
               g.m21 * h.m11 + g.m22 * h.m21, g.m21 * h.m12 + g.m22 * h.m22,
               std::max(g.chain, h.chain) + 1};
    if (r.chain > kRenormChain) r = renormalized(r);
    return sign_normalized(r);
}

Isometry inverse(const Isometry& g) {
    return sign_normalized({g.m22, -g.m12, -g.m21, g.m11, g.chain});
}

Isometry conjugate(const Isometry& g, const Isometry& h) {
    return compose(compose(h, g), inverse(h));
}

Isometry commutator(const Isometry& g, const Isometry& h) {
    return compose(compose(g, h), compose(inverse(g), inverse(h)));
}

IsometryType classify(const Isometry& g0) {
    const Isometry g = sign_normalized(g0);
    const double dev = std::max({std::abs(g.m11 - 1.0), std::abs(g.m12), std::abs(g.m21),
                                 std::abs(g.m22 - 1.0)});
    if (dev < kIdentityTol) return IsometryType::identity;
    const double t = std::abs(trace(g));
    if (t > 2.0 + kTraceBand) return IsometryType::hyperbolic;
    if (t < 2.0 - kTraceBand) return IsometryType::elliptic;
    return IsometryType::parabolic;
}

double translation_length(const Isometry& g) {
    if (classify(g) != IsometryType::hyperbolic)
        throw classification_error("translation_length: not hyperbolic (|tr| <= 2 + 1e-9)");
    return 2.0 * acosh1p(std::abs(trace(g)) / 2.0 - 1.0);
}

PlanePoint apply(const Isometry& g, const PlanePoint& p) {
    const double cx = g.m21 * p.x + g.m22;
    const double cy = g.m21 * p.y;
    const double den = cx * cx + cy * cy;
    const double ax = g.m11 * p.x + g.m12;
    PlanePoint q;
    q.x = (ax * cx + g.m11 * g.m21 * p.y * p.y) / den;
    // det = 1 is the class invariant; recomputing it here would inject
    // cancellation noise for large-entry matrices.
    q.y = p.y / den;
    if (!(q.y > 0.0) || !std::isfinite(q.x) || !std::isfinite(q.y))
        throw internal_error("apply: image left the upper half-plane");
    return q;
}

double distance(const PlanePoint& p, const PlanePoint& q) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return acosh1p((dx * dx + dy * dy) / (2.0 * p.y * q.y));
}

std::pair<double, double> fixed_points(const Isometry& g) {
    if (classify(g) != IsometryType::hyperbolic)
        throw classification_error("fixed_points: not hyperbolic");
    if (std::abs(g.m21) < 1e-300)
        throw internal_error("fixed_points: axis passes through infinity");
    // Fixed points of (a t + b)/(c t + d) = t: c t^2 + (d - a) t - b = 0.
    const double diff = g.m22 - g.m11;
    const double disc = diff * diff + 4.0 * g.m12 * g.m21;  // = tr^2 - 4 det > 0
    const double s = std::sqrt(std::max(disc, 0.0));
    double t1 = (-diff - s) / (2.0 * g.m21);
    double t2 = (-diff + s) / (2.0 * g.m21);
    if (t1 > t2) std::swap(t1, t2);
    return {t1, t2};
}

}  // namespace systolic
