// laminate.cpp
// Straight-tube construction for the bonded film clamped along {x1=0}.

#include <cmath>

#include "delamina/construct.hpp"
#include "delamina/scaling.hpp"
#include "tube_profile.hpp"

namespace delamina {

using detail::smoothstep01;
using detail::tube_shape;
using detail::tube_shape_d;
using detail::tube_shape_integrals;

LaminateParams optimal_laminate_params(double sigma, double gamma) {
    if (classify_regime(sigma, gamma) != Regime::B)
        throw RegimeError("optimal_laminate_params: (sigma,gamma) outside regime B");
    LaminateParams p;
    p.period = std::pow(sigma * gamma, 0.4);
    p.tube_width = std::pow(sigma, 0.8) * std::pow(gamma, -0.2);
    // Admissibility: tube_width <= period <= 1.
    if (p.period > 1.0) p.period = 1.0;
    if (p.tube_width > p.period) p.tube_width = p.period;
    p.boundary_layer = p.period;
    return p;
}

namespace detail_lam {

// One interior column of tubes: w profile and the tangential displacement
// that makes the 22 strain vanish where the pattern is at full amplitude.
struct Column {
    std::vector<double> w;   // nodes 0..ny
    std::vector<double> u2;
};

Column build_column(const Grid& g, double period, double width, double absorption_per_tube) {
    const auto& I = tube_shape_integrals();
    const int ntubes = int(std::lround(g.ly / period));
    const double h = g.ly / ntubes;  // snapped period
    const double amp = std::sqrt(absorption_per_tube * width / I.ib1);

    Column col;
    col.w.assign(g.npy(), 0.0);
    std::vector<double> dw(g.npy(), 0.0);
    for (int j = 0; j <= g.ny; ++j) {
        const double y = g.y(j);
        const int m = int(std::floor(y / h));
        const double c = (m + 0.5) * h;
        const double xi = (y - c) / width + 0.5;
        col.w[j] = amp * tube_shape(xi);
        dw[j] = amp * tube_shape_d(xi) / width;
    }
    // u2' = (1 - (dw)^2)/2, accumulated with the trapezoid rule.
    col.u2.assign(g.npy(), 0.0);
    for (int j = 1; j <= g.ny; ++j) {
        const double a = 0.5 * (1.0 - dw[j - 1] * dw[j - 1]);
        const double b = 0.5 * (1.0 - dw[j] * dw[j]);
        col.u2[j] = col.u2[j - 1] + 0.5 * g.dy() * (a + b);
    }
    return col;
}

} // namespace detail_lam

ConstructedState laminate(const Grid& g, double sigma, double gamma) {
    LaminateParams p = optimal_laminate_params(sigma, gamma);

    // Bend-vs-bond balance with the real profile constant; the pure power law
    // fixes only the scaling of the width.
    double width = detail::balanced_tube_width(sigma, gamma, p.period);
    if (width > 0.45 * p.period) width = 0.45 * p.period;
    if (width < 4.0 * g.dy())
        throw ResolutionError("laminate: tube width below 4 grid cells");
    const int ntubes = int(std::lround(g.ly / p.period));
    if (ntubes < 1) throw ResolutionError("laminate: period exceeds the domain");
    const double period = g.ly / ntubes;
    const double eps_bl = p.boundary_layer;

    detail_lam::Column col = detail_lam::build_column(g, period, width, period);

    ConstructedState s;
    s.u = VectorField2(g);
    s.w = ScalarField(g, 0.0);
    s.boundary = BoundarySpec::left_dirichlet();
    s.id = "laminate";

    for (int i = 0; i <= g.nx; ++i) {
        const double x1 = g.x(i);
        const double ramp = smoothstep01(x1 / eps_bl);
        const double rho = ramp * ramp;
        for (int j = 0; j <= g.ny; ++j) {
            const std::size_t k = g.idx(i, j);
            s.w.v[k] = ramp * col.w[j];
            s.u.y.v[k] = rho * col.u2[j];
            s.u.x.v[k] = 0.5 * x1;
        }
    }
    // Clamped edge exactly zero (u1 = x1/2 and the ramps already vanish there).
    for (int j = 0; j <= g.ny; ++j) {
        const std::size_t k = g.idx(0, j);
        s.w.v[k] = 0.0;
        s.u.x.v[k] = 0.0;
        s.u.y.v[k] = 0.0;
    }

    LaminateParams used = p;
    used.period = period;
    used.tube_width = width;
    used.boundary_layer = eps_bl;
    s.laminate_params = used;
    s.predicted_energy = 5.0 * std::pow(sigma * gamma, 0.4);
    return s;
}

} // namespace delamina
