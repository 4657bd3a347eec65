// tube_profile.hpp
// Cross profile of a debonded tube: a half-sine windowed to zero slope at the
// liftoff lines, so the curvature stays bounded while the bend constant is
// well below the clamped-mode value. Shared by the laminate and branched
// tube builders.

#ifndef DELAMINA_TUBE_PROFILE_HPP
#define DELAMINA_TUBE_PROFILE_HPP

#include <cmath>
#include <numbers>

namespace delamina::detail {

inline constexpr double kTubeBlend = 0.22;  // window fraction at each end

inline double smoothstep01(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return t * t * (3.0 - 2.0 * t);
}

inline double smoothstep01_d(double t) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    return 6.0 * t * (1.0 - t);
}

inline double smoothstep01_dd(double t) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    return 6.0 - 12.0 * t;
}

// B(xi) on [0,1], zero value and slope at both ends.
inline double tube_shape(double xi) {
    if (xi <= 0.0 || xi >= 1.0) return 0.0;
    const double c = kTubeBlend;
    return std::sin(std::numbers::pi * xi) * smoothstep01(xi / c) * smoothstep01((1.0 - xi) / c);
}

inline double tube_shape_d(double xi) {
    if (xi <= 0.0 || xi >= 1.0) return 0.0;
    const double c = kTubeBlend;
    const double pi = std::numbers::pi;
    const double s = std::sin(pi * xi), sc = std::cos(pi * xi);
    const double a = smoothstep01(xi / c), b = smoothstep01((1.0 - xi) / c);
    const double ad = smoothstep01_d(xi / c) / c, bd = -smoothstep01_d((1.0 - xi) / c) / c;
    return pi * sc * a * b + s * (ad * b + a * bd);
}

inline double tube_shape_dd(double xi) {
    if (xi <= 0.0 || xi >= 1.0) return 0.0;
    const double c = kTubeBlend;
    const double pi = std::numbers::pi;
    const double s = std::sin(pi * xi), sc = std::cos(pi * xi);
    const double a = smoothstep01(xi / c), b = smoothstep01((1.0 - xi) / c);
    const double ad = smoothstep01_d(xi / c) / c, bd = -smoothstep01_d((1.0 - xi) / c) / c;
    const double add = smoothstep01_dd(xi / c) / (c * c);
    const double bdd = smoothstep01_dd((1.0 - xi) / c) / (c * c);
    return -pi * pi * s * a * b + 2.0 * pi * sc * (ad * b + a * bd) +
           s * (add * b + 2.0 * ad * bd + a * bdd);
}

// Integrals of B'^2 and B''^2 over [0,1] (composite Simpson).
struct TubeShapeInts {
    double ib1 = 0.0;  // integral of B'^2
    double ib2 = 0.0;  // integral of B''^2
};

inline const TubeShapeInts& tube_shape_integrals() {
    static const TubeShapeInts ints = [] {
        TubeShapeInts r;
        const int n = 4096;
        const double h = 1.0 / n;
        for (int k = 0; k <= n; ++k) {
            const double xi = k * h;
            const double wgt = (k == 0 || k == n) ? 1.0 : (k % 2 ? 4.0 : 2.0);
            const double d1 = tube_shape_d(xi), d2 = tube_shape_dd(xi);
            r.ib1 += wgt * d1 * d1;
            r.ib2 += wgt * d2 * d2;
        }
        r.ib1 *= h / 3.0;
        r.ib2 *= h / 3.0;
        return r;
    }();
    return ints;
}

// Width that balances bond against bend for one tube of period h.
inline double balanced_tube_width(double sigma, double gamma, double period) {
    const auto& I = tube_shape_integrals();
    const double ceff = I.ib2 / I.ib1;
    return std::cbrt(2.0 * ceff * sigma * sigma * period / gamma);
}

} // namespace delamina::detail

#endif
