// ops.cpp

#include "delamina/ops.hpp"

#include <cmath>

namespace delamina {

namespace {

// One pass of the 1D first-derivative stencil along a line of n+1 nodes with
// spacing d. src/dst are accessed through stride.
inline void d1_line(const double* src, double* dst, int n, double d, std::ptrdiff_t stride) {
    const double i2d = 1.0 / (2.0 * d);
    dst[0] = (-3.0 * src[0] + 4.0 * src[stride] - src[2 * stride]) * i2d;
    for (int k = 1; k < n; ++k)
        dst[std::ptrdiff_t(k) * stride] =
            (src[(k + 1) * stride] - src[(k - 1) * stride]) * i2d;
    dst[std::ptrdiff_t(n) * stride] =
        (3.0 * src[n * stride] - 4.0 * src[(n - 1) * stride] + src[(n - 2) * stride]) * i2d;
}

inline void d1_line_adjoint(const double* src, double* dst, int n, double d,
                            std::ptrdiff_t stride) {
    const double i2d = 1.0 / (2.0 * d);
    auto add = [&](int k, double v) { dst[std::ptrdiff_t(k) * stride] += v; };
    add(0, -3.0 * i2d * src[0]);
    add(1, 4.0 * i2d * src[0]);
    add(2, -i2d * src[0]);
    for (int k = 1; k < n; ++k) {
        const double g = src[std::ptrdiff_t(k) * stride] * i2d;
        add(k + 1, g);
        add(k - 1, -g);
    }
    const double gn = src[std::ptrdiff_t(n) * stride];
    add(n, 3.0 * i2d * gn);
    add(n - 1, -4.0 * i2d * gn);
    add(n - 2, i2d * gn);
}

inline void d2_line(const double* src, double* dst, int n, double d, std::ptrdiff_t stride) {
    const double id2 = 1.0 / (d * d);
    dst[0] = (2.0 * src[0] - 5.0 * src[stride] + 4.0 * src[2 * stride] - src[3 * stride]) * id2;
    for (int k = 1; k < n; ++k)
        dst[std::ptrdiff_t(k) * stride] =
            (src[(k + 1) * stride] - 2.0 * src[std::ptrdiff_t(k) * stride] +
             src[(k - 1) * stride]) * id2;
    dst[std::ptrdiff_t(n) * stride] =
        (2.0 * src[n * stride] - 5.0 * src[(n - 1) * stride] + 4.0 * src[(n - 2) * stride] -
         src[(n - 3) * stride]) * id2;
}

inline void d2_line_adjoint(const double* src, double* dst, int n, double d,
                            std::ptrdiff_t stride) {
    const double id2 = 1.0 / (d * d);
    auto add = [&](int k, double v) { dst[std::ptrdiff_t(k) * stride] += v; };
    const double g0 = src[0] * id2;
    add(0, 2.0 * g0);
    add(1, -5.0 * g0);
    add(2, 4.0 * g0);
    add(3, -g0);
    for (int k = 1; k < n; ++k) {
        const double g = src[std::ptrdiff_t(k) * stride] * id2;
        add(k + 1, g);
        add(k, -2.0 * g);
        add(k - 1, g);
    }
    const double gn = src[std::ptrdiff_t(n) * stride] * id2;
    add(n, 2.0 * gn);
    add(n - 1, -5.0 * gn);
    add(n - 2, 4.0 * gn);
    add(n - 3, -gn);
}

template <typename LineOp>
ScalarField apply_x(const ScalarField& f, LineOp op, bool accumulate) {
    ScalarField out(f.grid, 0.0);
    const Grid& g = f.grid;
    (void)accumulate;
    for (int j = 0; j <= g.ny; ++j)
        op(&f.v[g.idx(0, j)], &out.v[g.idx(0, j)], g.nx, g.dx(), std::ptrdiff_t(1));
    return out;
}

template <typename LineOp>
ScalarField apply_y(const ScalarField& f, LineOp op, bool accumulate) {
    ScalarField out(f.grid, 0.0);
    const Grid& g = f.grid;
    (void)accumulate;
    for (int i = 0; i <= g.nx; ++i)
        op(&f.v[g.idx(i, 0)], &out.v[g.idx(i, 0)], g.ny, g.dy(), std::ptrdiff_t(g.npx()));
    return out;
}

} // namespace

ScalarField deriv_x(const ScalarField& f) { return apply_x(f, d1_line, false); }
ScalarField deriv_y(const ScalarField& f) { return apply_y(f, d1_line, false); }
ScalarField deriv_xx(const ScalarField& f) { return apply_x(f, d2_line, false); }
ScalarField deriv_yy(const ScalarField& f) { return apply_y(f, d2_line, false); }
ScalarField deriv_xy(const ScalarField& f) { return deriv_y(deriv_x(f)); }

ScalarField deriv_x_adjoint(const ScalarField& g) { return apply_x(g, d1_line_adjoint, true); }
ScalarField deriv_y_adjoint(const ScalarField& g) { return apply_y(g, d1_line_adjoint, true); }
ScalarField deriv_xx_adjoint(const ScalarField& g) { return apply_x(g, d2_line_adjoint, true); }
ScalarField deriv_yy_adjoint(const ScalarField& g) { return apply_y(g, d2_line_adjoint, true); }
ScalarField deriv_xy_adjoint(const ScalarField& g) {
    // (D1y D1x)^T = D1x^T D1y^T
    return deriv_x_adjoint(deriv_y_adjoint(g));
}

VectorField2 gradient(const ScalarField& f) {
    VectorField2 out(f.grid);
    out.x = deriv_x(f);
    out.y = deriv_y(f);
    return out;
}

SymTensorField hessian(const ScalarField& f) {
    SymTensorField out(f.grid);
    out.xx = deriv_xx(f);
    out.yy = deriv_yy(f);
    out.xy = deriv_xy(f);
    return out;
}

SymTensorField strain(const VectorField2& u, const ScalarField& w, double eigenstrain) {
    require_same_grid(u.grid, w.grid, "strain");
    const Grid& g = w.grid;
    SymTensorField eps(g);
    ScalarField u1x = deriv_x(u.x), u1y = deriv_y(u.x);
    ScalarField u2x = deriv_x(u.y), u2y = deriv_y(u.y);
    ScalarField wx = deriv_x(w), wy = deriv_y(w);
    const double e2 = 2.0 * eigenstrain;
    for (std::size_t k = 0; k < g.nodes(); ++k) {
        eps.xx.v[k] = 2.0 * u1x.v[k] + wx.v[k] * wx.v[k] - e2;
        eps.yy.v[k] = 2.0 * u2y.v[k] + wy.v[k] * wy.v[k] - e2;
        eps.xy.v[k] = u1y.v[k] + u2x.v[k] + wx.v[k] * wy.v[k];
    }
    return eps;
}

double quad_weight(const Grid& g, int i, int j) {
    const double wx = (i == 0 || i == g.nx) ? 0.5 : 1.0;
    const double wy = (j == 0 || j == g.ny) ? 0.5 : 1.0;
    return g.dx() * g.dy() * wx * wy;
}

double integrate(const ScalarField& f) {
    const Grid& g = f.grid;
    double sum = 0.0, comp = 0.0;  // Kahan
    for (int j = 0; j <= g.ny; ++j) {
        const double wy = (j == 0 || j == g.ny) ? 0.5 : 1.0;
        for (int i = 0; i <= g.nx; ++i) {
            const double wx = (i == 0 || i == g.nx) ? 0.5 : 1.0;
            const double term = f.v[g.idx(i, j)] * (wx * wy);
            const double y = term - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
    }
    return sum * g.dx() * g.dy();
}

double signed_distance(const Grid& g, double x, double y) {
    double d = x;
    if (g.lx - x < d) d = g.lx - x;
    if (y < d) d = y;
    if (g.ly - y < d) d = g.ly - y;
    return d;
}

ScalarField distance_to_boundary(const Grid& g) {
    ScalarField out(g);
    for (int j = 0; j <= g.ny; ++j)
        for (int i = 0; i <= g.nx; ++i) {
            double d = signed_distance(g, g.x(i), g.y(j));
            out.v[g.idx(i, j)] = d > 0.0 ? d : 0.0;
        }
    return out;
}

ScalarField mollify(const ScalarField& f, double sigma) {
    const Grid& g = f.grid;
    if (!(sigma >= 2.0 * g.spacing()))
        throw ResolutionError("mollify: sigma below 2x grid spacing");
    const double mside = g.lx < g.ly ? g.lx : g.ly;
    if (!(sigma <= mside / 2.0))
        throw InvalidArgument("mollify: sigma must not exceed half the domain");
    const int rx = int(std::floor(sigma / g.dx()));
    const int ry = int(std::floor(sigma / g.dy()));
    const double is2 = 1.0 / (sigma * sigma);

    // Kernel sampled on node offsets, normalized so the weights sum to 1.
    std::vector<double> ker((2 * rx + 1) * (2 * ry + 1), 0.0);
    double total = 0.0;
    for (int q = -ry; q <= ry; ++q)
        for (int p = -rx; p <= rx; ++p) {
            const double r2 = (p * g.dx()) * (p * g.dx()) + (q * g.dy()) * (q * g.dy());
            const double t = 1.0 - r2 * is2;
            if (t > 0.0) {
                const double wgt = t * t * t;
                ker[(q + ry) * (2 * rx + 1) + (p + rx)] = wgt;
                total += wgt;
            }
        }
    for (auto& wgt : ker) wgt /= total;

    // Even reflection across the boundary: reproduces constants everywhere
    // and reads only zeros when the input vanishes near the boundary, so
    // interior-supported integrals are preserved exactly.
    auto mirror = [](int k, int n) {
        if (k < 0) return -k;
        if (k > n) return 2 * n - k;
        return k;
    };
    ScalarField out(g);
    for (int j = 0; j <= g.ny; ++j)
        for (int i = 0; i <= g.nx; ++i) {
            double acc = 0.0;
            for (int q = -ry; q <= ry; ++q) {
                const int jj = mirror(j + q, g.ny);
                for (int p = -rx; p <= rx; ++p) {
                    const int ii = mirror(i + p, g.nx);
                    acc += ker[(q + ry) * (2 * rx + 1) + (p + rx)] * f.v[g.idx(ii, jj)];
                }
            }
            out.v[g.idx(i, j)] = acc;
        }
    return out;
}

double field_min(const ScalarField& f) {
    double m = f.v.empty() ? 0.0 : f.v[0];
    for (double x : f.v)
        if (x < m) m = x;
    return m;
}

double field_max(const ScalarField& f) {
    double m = f.v.empty() ? 0.0 : f.v[0];
    for (double x : f.v)
        if (x > m) m = x;
    return m;
}

bool field_finite(const ScalarField& f) {
    for (double x : f.v)
        if (!std::isfinite(x)) return false;
    return true;
}

} // namespace delamina
