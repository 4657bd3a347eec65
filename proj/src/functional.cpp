// functional.cpp

#include "delamina/functional.hpp"

#include <cmath>

namespace delamina {

namespace {

ScalarField weights(const Grid& g) {
    ScalarField q(g);
    for (int j = 0; j <= g.ny; ++j)
        for (int i = 0; i <= g.nx; ++i) q.v[g.idx(i, j)] = quad_weight(g, i, j);
    return q;
}

void add_scaled(ScalarField& dst, const ScalarField& src) {
    for (std::size_t k = 0; k < dst.v.size(); ++k) dst.v[k] += src.v[k];
}

// Bending gradient shared by every kind that carries a |D^2 w|-type term:
// coefficients cxx, cyy, cxy multiply hxx, hyy, hxy nodewise (q included).
ScalarField bend_gradient(const ScalarField& cxx, const ScalarField& cyy,
                          const ScalarField& cxy) {
    ScalarField out = deriv_xx_adjoint(cxx);
    add_scaled(out, deriv_yy_adjoint(cyy));
    add_scaled(out, deriv_xy_adjoint(cxy));
    return out;
}

} // namespace

FunctionalKind functional_kind_from_string(const std::string& s) {
    if (s == "eikonal") return FunctionalKind::Eikonal;
    if (s == "fvk") return FunctionalKind::Fvk;
    if (s == "fvk-general") return FunctionalKind::FvkGeneral;
    if (s == "bonded-smooth" || s == "bonded") return FunctionalKind::BondedSmooth;
    if (s == "linearized") return FunctionalKind::Linearized;
    if (s == "harmonic") return FunctionalKind::Harmonic;
    throw InvalidArgument("unsupported functional kind: " + s);
}

std::string to_string(FunctionalKind k) {
    switch (k) {
        case FunctionalKind::Eikonal: return "eikonal";
        case FunctionalKind::Fvk: return "fvk";
        case FunctionalKind::FvkGeneral: return "fvk-general";
        case FunctionalKind::BondedSmooth: return "bonded-smooth";
        case FunctionalKind::Linearized: return "linearized";
        case FunctionalKind::Harmonic: return "harmonic";
    }
    return "?";
}

double objective_value(const Functional& f, const State& s) {
    switch (f.kind) {
        case FunctionalKind::Eikonal: return eikonal_energy(s.w, f.params.sigma).total;
        case FunctionalKind::Fvk: return fvk_energy(s.u, s.w, f.params.sigma).total;
        case FunctionalKind::FvkGeneral: return fvk_general_energy(s.u, s.w, f.params).total;
        case FunctionalKind::BondedSmooth:
            return bonded_energy_smooth(s.u, s.w, f.params.sigma, f.params.gamma, f.params.eta);
        case FunctionalKind::Linearized: return linearized_energy(s.u, s.w, f.params);
        case FunctionalKind::Harmonic: {
            ScalarField gx = deriv_x(s.w), gy = deriv_y(s.w);
            ScalarField dens(s.grid());
            for (std::size_t k = 0; k < dens.v.size(); ++k)
                dens.v[k] = gx.v[k] * gx.v[k] + gy.v[k] * gy.v[k];
            return integrate(dens);
        }
    }
    throw InvalidArgument("objective_value: unsupported functional kind");
}

EnergyBreakdown objective_breakdown(const Functional& f, const State& s) {
    switch (f.kind) {
        case FunctionalKind::Eikonal: return eikonal_energy(s.w, f.params.sigma);
        case FunctionalKind::Fvk: return fvk_energy(s.u, s.w, f.params.sigma);
        case FunctionalKind::FvkGeneral: return fvk_general_energy(s.u, s.w, f.params);
        case FunctionalKind::BondedSmooth:
            return bonded_energy(s.u, s.w, f.params.sigma, f.params.gamma, f.params.eta);
        case FunctionalKind::Linearized: {
            EnergyBreakdown b;
            b.total = linearized_energy(s.u, s.w, f.params);
            return b;
        }
        case FunctionalKind::Harmonic: {
            EnergyBreakdown b;
            b.stretch = objective_value(f, s);
            b.total = b.stretch;
            return b;
        }
    }
    throw InvalidArgument("objective_breakdown: unsupported functional kind");
}

State discrete_gradient(const Functional& f, const State& s) {
    require_same_grid(s.u.grid, s.w.grid, "discrete_gradient");
    const Grid& g = s.grid();
    const ScalarField q = weights(g);
    State grad(g);

    const double sigma = f.params.sigma;

    auto scaled = [&](const ScalarField& a, auto coeff) {
        ScalarField out(g);
        for (std::size_t k = 0; k < out.v.size(); ++k) out.v[k] = coeff(k) * a.v[k];
        return out;
    };
    (void)scaled;

    switch (f.kind) {
        case FunctionalKind::Eikonal: {
            ScalarField gx = deriv_x(s.w), gy = deriv_y(s.w);
            ScalarField hxx = deriv_xx(s.w), hyy = deriv_yy(s.w), hxy = deriv_xy(s.w);
            ScalarField cx(g), cy(g), cxx(g), cyy(g), cxy(g);
            const double s2 = sigma * sigma;
            for (std::size_t k = 0; k < g.nodes(); ++k) {
                const double e = gx.v[k] * gx.v[k] + gy.v[k] * gy.v[k] - 1.0;
                cx.v[k] = q.v[k] * 4.0 * e * gx.v[k];
                cy.v[k] = q.v[k] * 4.0 * e * gy.v[k];
                cxx.v[k] = q.v[k] * s2 * 2.0 * hxx.v[k];
                cyy.v[k] = q.v[k] * s2 * 2.0 * hyy.v[k];
                cxy.v[k] = q.v[k] * s2 * 4.0 * hxy.v[k];
            }
            grad.w = deriv_x_adjoint(cx);
            add_scaled(grad.w, deriv_y_adjoint(cy));
            add_scaled(grad.w, bend_gradient(cxx, cyy, cxy));
            break;
        }
        case FunctionalKind::Fvk:
        case FunctionalKind::BondedSmooth: {
            ScalarField gx = deriv_x(s.w), gy = deriv_y(s.w);
            SymTensorField eps = strain(s.u, s.w, 0.5);
            ScalarField hxx = deriv_xx(s.w), hyy = deriv_yy(s.w), hxy = deriv_xy(s.w);
            ScalarField a(g), b(g), c(g);  // q*4*eps components
            ScalarField wx(g), wy(g), cxx(g), cyy(g), cxy(g);
            const double s2 = sigma * sigma;
            for (std::size_t k = 0; k < g.nodes(); ++k) {
                a.v[k] = q.v[k] * 4.0 * eps.xx.v[k];
                b.v[k] = q.v[k] * 4.0 * eps.xy.v[k];
                c.v[k] = q.v[k] * 4.0 * eps.yy.v[k];
                wx.v[k] = a.v[k] * gx.v[k] + b.v[k] * gy.v[k];
                wy.v[k] = c.v[k] * gy.v[k] + b.v[k] * gx.v[k];
                cxx.v[k] = q.v[k] * s2 * 2.0 * hxx.v[k];
                cyy.v[k] = q.v[k] * s2 * 2.0 * hyy.v[k];
                cxy.v[k] = q.v[k] * s2 * 4.0 * hxy.v[k];
            }
            grad.u.x = deriv_x_adjoint(a);
            add_scaled(grad.u.x, deriv_y_adjoint(b));
            grad.u.y = deriv_x_adjoint(b);
            add_scaled(grad.u.y, deriv_y_adjoint(c));
            grad.w = deriv_x_adjoint(wx);
            add_scaled(grad.w, deriv_y_adjoint(wy));
            add_scaled(grad.w, bend_gradient(cxx, cyy, cxy));
            if (f.kind == FunctionalKind::BondedSmooth) {
                const double gb = f.params.gamma / f.params.eta;
                for (std::size_t k = 0; k < g.nodes(); ++k)
                    if (s.w.v[k] < f.params.eta) grad.w.v[k] += q.v[k] * gb;
            }
            break;
        }
        case FunctionalKind::FvkGeneral: {
            f.params.validate();
            const double nu = f.params.nu;
            const double pref = 0.5 * f.params.young * f.params.thickness;
            const double bendc = f.params.thickness * f.params.thickness / 12.0;
            ScalarField gx = deriv_x(s.w), gy = deriv_y(s.w);
            SymTensorField eps = strain(s.u, s.w, f.params.eigenstrain);
            ScalarField hxx = deriv_xx(s.w), hyy = deriv_yy(s.w), hxy = deriv_xy(s.w);
            ScalarField sxx(g), syy(g), sxy(g), wx(g), wy(g), cxx(g), cyy(g), cxy(g);
            for (std::size_t k = 0; k < g.nodes(); ++k) {
                const double tr = eps.xx.v[k] + eps.yy.v[k];
                sxx.v[k] = q.v[k] * pref * (2.0 * (1.0 - nu) * eps.xx.v[k] + 2.0 * nu * tr);
                syy.v[k] = q.v[k] * pref * (2.0 * (1.0 - nu) * eps.yy.v[k] + 2.0 * nu * tr);
                sxy.v[k] = q.v[k] * pref * 4.0 * (1.0 - nu) * eps.xy.v[k];
                wx.v[k] = 2.0 * sxx.v[k] * gx.v[k] + sxy.v[k] * gy.v[k];
                wy.v[k] = 2.0 * syy.v[k] * gy.v[k] + sxy.v[k] * gx.v[k];
                const double lap = hxx.v[k] + hyy.v[k];
                cxx.v[k] = q.v[k] * pref * bendc * (2.0 * (1.0 - nu) * hxx.v[k] + 2.0 * nu * lap);
                cyy.v[k] = q.v[k] * pref * bendc * (2.0 * (1.0 - nu) * hyy.v[k] + 2.0 * nu * lap);
                cxy.v[k] = q.v[k] * pref * bendc * 4.0 * (1.0 - nu) * hxy.v[k];
            }
            ScalarField sxx2 = sxx, syy2 = syy;
            for (std::size_t k = 0; k < g.nodes(); ++k) {
                sxx2.v[k] *= 2.0;
                syy2.v[k] *= 2.0;
            }
            grad.u.x = deriv_x_adjoint(sxx2);
            add_scaled(grad.u.x, deriv_y_adjoint(sxy));
            grad.u.y = deriv_x_adjoint(sxy);
            add_scaled(grad.u.y, deriv_y_adjoint(syy2));
            grad.w = deriv_x_adjoint(wx);
            add_scaled(grad.w, deriv_y_adjoint(wy));
            add_scaled(grad.w, bend_gradient(cxx, cyy, cxy));
            break;
        }
        case FunctionalKind::Linearized: {
            f.params.validate();
            const double nu = f.params.nu;
            const double d = f.params.eigenstrain;
            const double pref = 0.5 * f.params.young * f.params.thickness;
            const double bendc = f.params.thickness * f.params.thickness / 12.0;
            ScalarField u1x = deriv_x(s.u.x), u1y = deriv_y(s.u.x);
            ScalarField u2x = deriv_x(s.u.y), u2y = deriv_y(s.u.y);
            ScalarField gx = deriv_x(s.w), gy = deriv_y(s.w);
            ScalarField hxx = deriv_xx(s.w), hyy = deriv_yy(s.w), hxy = deriv_xy(s.w);
            ScalarField c1x(g), c1y(g), c2x(g), c2y(g), wx(g), wy(g), cxx(g), cyy(g), cxy(g);
            for (std::size_t k = 0; k < g.nodes(); ++k) {
                const double axx = 2.0 * u1x.v[k] - 2.0 * d;
                const double ayy = 2.0 * u2y.v[k] - 2.0 * d;
                const double axy = u1y.v[k] + u2x.v[k];
                const double dv = 2.0 * (u1x.v[k] + u2y.v[k]) - 4.0 * d;
                c1x.v[k] = q.v[k] * pref * (4.0 * (1.0 - nu) * axx + 4.0 * nu * dv);
                c2y.v[k] = q.v[k] * pref * (4.0 * (1.0 - nu) * ayy + 4.0 * nu * dv);
                c1y.v[k] = q.v[k] * pref * 4.0 * (1.0 - nu) * axy;
                c2x.v[k] = c1y.v[k];
                const double wc = -8.0 * d * (1.0 + 2.0 * nu) * pref;
                wx.v[k] = q.v[k] * wc * gx.v[k];
                wy.v[k] = q.v[k] * wc * gy.v[k];
                const double lap = hxx.v[k] + hyy.v[k];
                cxx.v[k] = q.v[k] * pref * bendc * (2.0 * (1.0 - nu) * hxx.v[k] + 2.0 * nu * lap);
                cyy.v[k] = q.v[k] * pref * bendc * (2.0 * (1.0 - nu) * hyy.v[k] + 2.0 * nu * lap);
                cxy.v[k] = q.v[k] * pref * bendc * 4.0 * (1.0 - nu) * hxy.v[k];
            }
            grad.u.x = deriv_x_adjoint(c1x);
            add_scaled(grad.u.x, deriv_y_adjoint(c1y));
            grad.u.y = deriv_x_adjoint(c2x);
            add_scaled(grad.u.y, deriv_y_adjoint(c2y));
            grad.w = deriv_x_adjoint(wx);
            add_scaled(grad.w, deriv_y_adjoint(wy));
            add_scaled(grad.w, bend_gradient(cxx, cyy, cxy));
            break;
        }
        case FunctionalKind::Harmonic: {
            ScalarField gx = deriv_x(s.w), gy = deriv_y(s.w);
            ScalarField cx(g), cy(g);
            for (std::size_t k = 0; k < g.nodes(); ++k) {
                cx.v[k] = q.v[k] * 2.0 * gx.v[k];
                cy.v[k] = q.v[k] * 2.0 * gy.v[k];
            }
            grad.w = deriv_x_adjoint(cx);
            add_scaled(grad.w, deriv_y_adjoint(cy));
            break;
        }
    }

    // Dirichlet rows carry no degrees of freedom.
    for (int j = 0; j <= g.ny; ++j)
        for (int i = 0; i <= g.nx; ++i)
            if (f.boundary.node_is_dirichlet(g, i, j)) {
                const std::size_t k = g.idx(i, j);
                grad.u.x.v[k] = 0.0;
                grad.u.y.v[k] = 0.0;
                grad.w.v[k] = 0.0;
            }
    return grad;
}

double state_dot(const State& a, const State& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.w.v.size(); ++k)
        s += a.u.x.v[k] * b.u.x.v[k] + a.u.y.v[k] * b.u.y.v[k] + a.w.v[k] * b.w.v[k];
    return s;
}

double state_norm(const State& a) { return std::sqrt(state_dot(a, a)); }

State state_axpy(const State& a, double t, const State& b) {
    State out = a;
    for (std::size_t k = 0; k < out.w.v.size(); ++k) {
        out.u.x.v[k] += t * b.u.x.v[k];
        out.u.y.v[k] += t * b.u.y.v[k];
        out.w.v[k] += t * b.w.v[k];
    }
    return out;
}

void impose_dirichlet(State& s, const BoundarySpec& bc) {
    const Grid& g = s.grid();
    for (int j = 0; j <= g.ny; ++j)
        for (int i = 0; i <= g.nx; ++i)
            if (bc.node_is_dirichlet(g, i, j)) {
                const std::size_t k = g.idx(i, j);
                s.u.x.v[k] = 0.0;
                s.u.y.v[k] = 0.0;
                s.w.v[k] = 0.0;
            }
}

} // namespace delamina
