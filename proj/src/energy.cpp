// energy.cpp

#include "delamina/energy.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace delamina {

namespace {

// Fixed-order compensated reduction of weight(i,j)*density(k) over the grid.
template <typename Density>
double reduce(const Grid& g, Density density) {
    double sum = 0.0, comp = 0.0;
    for (int j = 0; j <= g.ny; ++j) {
        const double wy = (j == 0 || j == g.ny) ? 0.5 : 1.0;
        for (int i = 0; i <= g.nx; ++i) {
            const double wx = (i == 0 || i == g.nx) ? 0.5 : 1.0;
            const double term = density(g.idx(i, j)) * (wx * wy);
            const double y = term - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
    }
    return sum * g.dx() * g.dy();
}

} // namespace

void EnergyParams::validate() const {
    if (!(sigma > 0.0)) throw InvalidArgument("EnergyParams: sigma must be > 0");
    if (!(gamma >= 0.0)) throw InvalidArgument("EnergyParams: gamma must be >= 0");
    if (!(nu >= -1.0 && nu <= 0.5)) throw InvalidArgument("EnergyParams: nu must be in [-1, 1/2]");
    if (!(young > 0.0)) throw InvalidArgument("EnergyParams: young must be > 0");
    if (!(thickness > 0.0)) throw InvalidArgument("EnergyParams: thickness must be > 0");
    if (!(eigenstrain >= 0.0 && eigenstrain < 1.0))
        throw InvalidArgument("EnergyParams: eigenstrain must be in [0,1)");
    if (!(eta > 0.0)) throw InvalidArgument("EnergyParams: eta must be > 0");
}

DeformationField3D::DeformationField3D(const Grid& g, int nz_, double h)
    : grid(g), nz(nz_), thickness(h) {
    if (nz < 2) throw InvalidArgument("DeformationField3D: nz must be >= 2");
    if (!(h > 0.0)) throw InvalidArgument("DeformationField3D: thickness must be > 0");
    x.assign(nodes(), 0.0);
    y.assign(nodes(), 0.0);
    z.assign(nodes(), 0.0);
}

EnergyBreakdown eikonal_energy(const ScalarField& w, double sigma) {
    if (!(sigma > 0.0)) throw InvalidArgument("eikonal_energy: sigma must be > 0");
    const Grid& g = w.grid;
    ScalarField wx = deriv_x(w), wy = deriv_y(w);
    ScalarField wxx = deriv_xx(w), wyy = deriv_yy(w), wxy = deriv_xy(w);
    EnergyBreakdown b;
    b.stretch = reduce(g, [&](std::size_t k) {
        const double e = wx.v[k] * wx.v[k] + wy.v[k] * wy.v[k] - 1.0;
        return e * e;
    });
    b.bend = sigma * sigma * reduce(g, [&](std::size_t k) {
        return wxx.v[k] * wxx.v[k] + 2.0 * wxy.v[k] * wxy.v[k] + wyy.v[k] * wyy.v[k];
    });
    b.bond = 0.0;
    b.total = b.stretch + b.bend;
    return b;
}

double fold_energy(const FoldSet& folds) {
    double sum = 0.0;
    for (const auto& s : folds.segments) {
        if (!(s.length > 0.0)) throw InvalidArgument("fold_energy: segment length must be > 0");
        if (!(s.jump_magnitude >= 0.0) || !std::isfinite(s.jump_magnitude))
            throw InvalidArgument("fold_energy: jump magnitude must be finite and >= 0");
        sum += s.jump_magnitude * s.jump_magnitude * s.jump_magnitude * s.length / 3.0;
    }
    return sum;
}

EnergyBreakdown fvk_energy(const VectorField2& u, const ScalarField& w, double sigma) {
    if (!(sigma > 0.0)) throw InvalidArgument("fvk_energy: sigma must be > 0");
    require_same_grid(u.grid, w.grid, "fvk_energy");
    const Grid& g = w.grid;
    SymTensorField eps = strain(u, w, 0.5);
    ScalarField wxx = deriv_xx(w), wyy = deriv_yy(w), wxy = deriv_xy(w);
    EnergyBreakdown b;
    b.stretch = reduce(g, [&](std::size_t k) {
        return eps.xx.v[k] * eps.xx.v[k] + 2.0 * eps.xy.v[k] * eps.xy.v[k] +
               eps.yy.v[k] * eps.yy.v[k];
    });
    b.bend = sigma * sigma * reduce(g, [&](std::size_t k) {
        return wxx.v[k] * wxx.v[k] + 2.0 * wxy.v[k] * wxy.v[k] + wyy.v[k] * wyy.v[k];
    });
    b.total = b.stretch + b.bend;
    return b;
}

EnergyBreakdown fvk_general_energy(const VectorField2& u, const ScalarField& w,
                                   const EnergyParams& p) {
    p.validate();
    require_same_grid(u.grid, w.grid, "fvk_general_energy");
    const Grid& g = w.grid;
    SymTensorField eps = strain(u, w, p.eigenstrain);
    ScalarField wxx = deriv_xx(w), wyy = deriv_yy(w), wxy = deriv_xy(w);
    const double pref = 0.5 * p.young * p.thickness;
    const double bendc = p.thickness * p.thickness / 12.0;
    EnergyBreakdown b;
    b.stretch = pref * reduce(g, [&](std::size_t k) {
        const double n2 = eps.xx.v[k] * eps.xx.v[k] + 2.0 * eps.xy.v[k] * eps.xy.v[k] +
                          eps.yy.v[k] * eps.yy.v[k];
        const double tr = eps.xx.v[k] + eps.yy.v[k];
        return (1.0 - p.nu) * n2 + p.nu * tr * tr;
    });
    b.bend = pref * bendc * reduce(g, [&](std::size_t k) {
        const double h2 = wxx.v[k] * wxx.v[k] + 2.0 * wxy.v[k] * wxy.v[k] +
                          wyy.v[k] * wyy.v[k];
        const double lap = wxx.v[k] + wyy.v[k];
        return (1.0 - p.nu) * h2 + p.nu * lap * lap;
    });
    b.total = b.stretch + b.bend;
    return b;
}

EnergyBreakdown bonded_energy(const VectorField2& u, const ScalarField& w, double sigma,
                              double gamma, double eta) {
    if (!(gamma >= 0.0)) throw InvalidArgument("bonded_energy: gamma must be >= 0");
    if (!(eta > 0.0)) throw InvalidArgument("bonded_energy: eta must be > 0");
    EnergyBreakdown b = fvk_energy(u, w, sigma);
    b.bond = gamma * reduce(w.grid, [&](std::size_t k) {
        return w.v[k] > eta ? 1.0 : 0.0;
    });
    b.total = b.stretch + b.bend + b.bond;
    return b;
}

double bonded_energy_smooth(const VectorField2& u, const ScalarField& w, double sigma,
                            double gamma, double eta) {
    if (!(eta > 0.0)) throw InvalidArgument("bonded_energy_smooth: eta must be > 0");
    EnergyBreakdown b = fvk_energy(u, w, sigma);
    const double bond = gamma * reduce(w.grid, [&](std::size_t k) {
        const double r = w.v[k] / eta;
        return r < 1.0 ? r : 1.0;
    });
    return b.stretch + b.bend + bond;
}

double linearized_energy(const VectorField2& u, const ScalarField& w, const EnergyParams& p) {
    p.validate();
    require_same_grid(u.grid, w.grid, "linearized_energy");
    const Grid& g = w.grid;
    ScalarField u1x = deriv_x(u.x), u1y = deriv_y(u.x);
    ScalarField u2x = deriv_x(u.y), u2y = deriv_y(u.y);
    ScalarField wx = deriv_x(w), wy = deriv_y(w);
    ScalarField wxx = deriv_xx(w), wyy = deriv_yy(w), wxy = deriv_xy(w);
    const double d = p.eigenstrain;
    const double bendc = p.thickness * p.thickness / 12.0;
    const double val = reduce(g, [&](std::size_t k) {
        const double axx = 2.0 * u1x.v[k] - 2.0 * d;
        const double ayy = 2.0 * u2y.v[k] - 2.0 * d;
        const double axy = u1y.v[k] + u2x.v[k];
        const double a2 = axx * axx + 2.0 * axy * axy + ayy * ayy;
        const double dw2 = wx.v[k] * wx.v[k] + wy.v[k] * wy.v[k];
        const double divu = u1x.v[k] + u2y.v[k];
        const double dv = 2.0 * divu - 4.0 * d;
        const double h2 = wxx.v[k] * wxx.v[k] + 2.0 * wxy.v[k] * wxy.v[k] +
                          wyy.v[k] * wyy.v[k];
        const double lap = wxx.v[k] + wyy.v[k];
        return (1.0 - p.nu) * a2 - 4.0 * d * dw2 + p.nu * dv * dv - 8.0 * d * p.nu * dw2 +
               bendc * ((1.0 - p.nu) * h2 + p.nu * lap * lap);
    });
    return 0.5 * p.young * p.thickness * val;
}

double dist_to_so3(const double F[3][3]) {
    Eigen::Matrix3d M;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) M(r, c) = F[r][c];
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Vector3d s = svd.singularValues();
    // det < 0: the nearest rotation flips the smallest singular direction.
    if (M.determinant() < 0.0) s[2] = -s[2];
    const double a = s[0] - 1.0, b = s[1] - 1.0, c = s[2] - 1.0;
    return std::sqrt(a * a + b * b + c * c);
}

double energy_3d(const DeformationField3D& v) {
    const Grid& g = v.grid;
    if (v.nz < 2) throw InvalidArgument("energy_3d: nz must be >= 2");
    const int nz = v.nz;
    const double dx = g.dx(), dy = g.dy(), dz = v.dz();
    const std::vector<double>* comps[3] = {&v.x, &v.y, &v.z};

    // d/d(axis) of component a at node (i,j,k); central interior, one-sided ends.
    auto d1 = [&](const std::vector<double>& a, int i, int j, int k, int axis) {
        int pos, n;
        double d;
        switch (axis) {
            case 0: pos = i; n = g.nx; d = dx; break;
            case 1: pos = j; n = g.ny; d = dy; break;
            default: pos = k; n = nz; d = dz; break;
        }
        auto at = [&](int m) {
            switch (axis) {
                case 0: return a[v.idx(m, j, k)];
                case 1: return a[v.idx(i, m, k)];
                default: return a[v.idx(i, j, m)];
            }
        };
        if (pos == 0) return (-3.0 * at(0) + 4.0 * at(1) - at(2)) / (2.0 * d);
        if (pos == n) return (3.0 * at(n) - 4.0 * at(n - 1) + at(n - 2)) / (2.0 * d);
        return (at(pos + 1) - at(pos - 1)) / (2.0 * d);
    };

    double sum = 0.0, kcomp = 0.0;
    for (int k = 0; k <= nz; ++k) {
        const double wz = (k == 0 || k == nz) ? 0.5 : 1.0;
        for (int j = 0; j <= g.ny; ++j) {
            const double wy = (j == 0 || j == g.ny) ? 0.5 : 1.0;
            for (int i = 0; i <= g.nx; ++i) {
                const double wx = (i == 0 || i == g.nx) ? 0.5 : 1.0;
                double F[3][3];
                for (int c = 0; c < 3; ++c)
                    for (int axis = 0; axis < 3; ++axis)
                        F[c][axis] = d1(*comps[c], i, j, k, axis);
                const double dist = dist_to_so3(F);
                const double term = dist * dist * (wx * wy * wz);
                const double yv = term - kcomp;
                const double t = sum + yv;
                kcomp = (t - sum) - yv;
                sum = t;
            }
        }
    }
    return sum * dx * dy * dz / v.thickness;
}

} // namespace delamina
