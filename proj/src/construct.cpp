// construct.cpp
// Tent, mollified tent, flat state, 3D lift.

#include "delamina/construct.hpp"

#include <cmath>

namespace delamina {

void LaminateParams::validate() const {
    if (!(period > 0.0 && period <= 1.0))
        throw InvalidArgument("LaminateParams: period must be in (0,1]");
    if (!(tube_width > 0.0 && tube_width <= period))
        throw InvalidArgument("LaminateParams: tube_width must be in (0, period]");
    if (!(boundary_layer > 0.0 && boundary_layer <= 1.0))
        throw InvalidArgument("LaminateParams: boundary_layer must be in (0,1]");
}

void BranchingParams::validate() const {
    if (generations < 0) throw InvalidArgument("BranchingParams: generations must be >= 0");
    if (!(base_period > 0.0)) throw InvalidArgument("BranchingParams: base_period must be > 0");
    if (int(refinement_positions.size()) != generations)
        throw InvalidArgument("BranchingParams: one refinement position per doubling");
    double prev = 0.0;
    for (double s : refinement_positions) {
        if (!(s > prev && s < 1.0))
            throw InvalidArgument("BranchingParams: refinement positions must increase inside (0,1)");
        prev = s;
    }
}

ScalarField tent(const Grid& g) { return distance_to_boundary(g); }

FoldSet tent_fold_set(const Grid& g) {
    FoldSet f;
    const double m = g.lx < g.ly ? g.lx : g.ly;
    const double sqrt2 = std::sqrt(2.0);
    // Four corner ridges at 45 degrees; gradient jumps between adjacent edge
    // normals, |e_i - (+-e_j)| = sqrt(2).
    for (int k = 0; k < 4; ++k)
        f.segments.push_back({m / 2.0 * sqrt2, sqrt2});
    // Central ridge for non-square rectangles: the two long-edge normals meet
    // head on with jump 2.
    if (g.lx != g.ly) f.segments.push_back({std::abs(g.lx - g.ly), 2.0});
    return f;
}

ScalarField mollified_tent(const Grid& g, double sigma) {
    if (!(sigma >= 2.0 * g.spacing()))
        throw ResolutionError("mollified_tent: sigma below 2x grid spacing");
    const double mside = g.lx < g.ly ? g.lx : g.ly;
    if (!(sigma < mside / 4.0))
        throw InvalidArgument("mollified_tent: sigma must be below min(lx,ly)/4");

    const int rx = int(std::floor(sigma / g.dx()));
    const int ry = int(std::floor(sigma / g.dy()));
    const double is2 = 1.0 / (sigma * sigma);
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

    // Convolve the signed distance, evaluated in closed form outside the
    // domain as well; odd symmetry across straight edges keeps w=0 there.
    ScalarField out(g);
    for (int j = 0; j <= g.ny; ++j) {
        const double yj = g.y(j);
        for (int i = 0; i <= g.nx; ++i) {
            const double xi = g.x(i);
            double acc = 0.0;
            for (int q = -ry; q <= ry; ++q)
                for (int p = -rx; p <= rx; ++p) {
                    const double wgt = ker[(q + ry) * (2 * rx + 1) + (p + rx)];
                    if (wgt != 0.0)
                        acc += wgt * signed_distance(g, xi + p * g.dx(), yj + q * g.dy());
                }
            // Slightly negative values appear near corners; clamp.
            out.v[g.idx(i, j)] = acc > 0.0 ? acc : 0.0;
        }
    }
    for (int i = 0; i <= g.nx; ++i) {
        out.v[g.idx(i, 0)] = 0.0;
        out.v[g.idx(i, g.ny)] = 0.0;
    }
    for (int j = 0; j <= g.ny; ++j) {
        out.v[g.idx(0, j)] = 0.0;
        out.v[g.idx(g.nx, j)] = 0.0;
    }
    return out;
}

ConstructedState flat(const Grid& g) {
    ConstructedState s;
    s.u = VectorField2(g);
    s.w = ScalarField(g, 0.0);
    s.predicted_energy = 2.0;
    s.boundary = BoundarySpec::left_dirichlet();
    s.id = "flat";
    return s;
}

DeformationField3D lift_to_3d(const VectorField2& u, const ScalarField& w, double delta,
                              double h, int nz) {
    require_same_grid(u.grid, w.grid, "lift_to_3d");
    if (!(delta > 0.0 && delta < 1.0))
        throw InvalidArgument("lift_to_3d: delta must be in (0,1)");
    if (!(h > 0.0 && h < std::sqrt(delta)))
        throw InvalidArgument("lift_to_3d: thickness must be in (0, sqrt(delta))");
    if (nz < 2) throw InvalidArgument("lift_to_3d: nz must be >= 2");

    const Grid& g = w.grid;
    DeformationField3D v(g, nz, h);
    ScalarField wx = deriv_x(w), wy = deriv_y(w);
    const double root = std::sqrt(2.0 * delta);
    const double scale = 1.0 - delta;
    for (int k = 0; k <= nz; ++k) {
        const double x3 = h * k / nz;
        for (int j = 0; j <= g.ny; ++j)
            for (int i = 0; i <= g.nx; ++i) {
                const std::size_t n2 = g.idx(i, j);
                const std::size_t n3 = v.idx(i, j, k);
                v.x[n3] = scale * (g.x(i) + 2.0 * delta * u.x.v[n2] - x3 * root * wx.v[n2]);
                v.y[n3] = scale * (g.y(j) + 2.0 * delta * u.y.v[n2] - x3 * root * wy.v[n2]);
                v.z[n3] = scale * (root * w.v[n2] + x3);
            }
    }
    return v;
}

} // namespace delamina
