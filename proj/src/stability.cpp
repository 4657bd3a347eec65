// stability.cpp

#include "delamina/stability.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace delamina {

void StabilityParams::validate() const {
    if (!(young > 0.0)) throw InvalidArgument("StabilityParams: young must be > 0");
    if (!(thickness > 0.0)) throw InvalidArgument("StabilityParams: thickness must be > 0");
    if (!(radius > 0.0)) throw InvalidArgument("StabilityParams: radius must be > 0");
    if (!(nu >= -1.0 && nu <= 0.5)) throw InvalidArgument("StabilityParams: nu must be in [-1, 1/2]");
    if (!(1.0 + 2.0 * nu > 0.0))
        throw InvalidArgument("StabilityParams: 1+2nu must be positive for a finite threshold");
    if (n_points < 64) throw InvalidArgument("StabilityParams: n_points must be >= 64");
}

namespace {

// Midpoint slope and curvature arrays of a nodal profile. phi has n+1 nodes;
// p and q live on the n interval midpoints. phi'(0)=0 enters as an odd
// reflection of p at the origin.
void midpoint_derivatives(const std::vector<double>& phi, double dr, std::vector<double>& p,
                          std::vector<double>& q) {
    const int n = int(phi.size()) - 1;
    p.assign(n, 0.0);
    for (int i = 0; i < n; ++i) p[i] = (phi[i + 1] - phi[i]) / dr;
    q.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        const double pm = i == 0 ? -p[0] : p[i - 1];
        const double pp = i == n - 1 ? 2.0 * p[n - 1] - p[n - 2] : p[i + 1];
        q[i] = (pp - pm) / (2.0 * dr);
    }
}

struct FormPieces {
    double bend = 0.0;   // integral of (phi''^2 + (phi'/r)^2 + 2 nu phi' phi''/r) r dr
    double destab = 0.0; // integral of phi'^2 r dr
};

FormPieces form_pieces(const std::vector<double>& phi, const StabilityParams& sp) {
    const int n = int(phi.size()) - 1;
    const double dr = sp.radius / n;
    std::vector<double> p, q;
    midpoint_derivatives(phi, dr, p, q);
    FormPieces f;
    for (int i = 0; i < n; ++i) {
        const double r = (i + 0.5) * dr;
        f.bend += dr * (r * q[i] * q[i] + p[i] * p[i] / r + 2.0 * sp.nu * p[i] * q[i]);
        f.destab += dr * r * p[i] * p[i];
    }
    return f;
}

void validate_profile(const RadialProfile& phi, const StabilityParams& sp) {
    if (int(phi.size()) != sp.n_points + 1)
        throw InvalidArgument("radial profile must have n_points+1 samples");
    double amax = 0.0;
    for (double v : phi) amax = std::max(amax, std::abs(v));
    if (std::abs(phi.back()) > 1e-12 * (1.0 + amax))
        throw InvalidArgument("radial profile must vanish at r = R");
    const double dr = sp.radius / sp.n_points;
    const double slope0 = (-3.0 * phi[0] + 4.0 * phi[1] - phi[2]) / (2.0 * dr);
    if (std::abs(slope0) * sp.radius > 0.05 * amax + 1e-14)
        throw InvalidArgument("radial profile must satisfy phi'(0) = 0");
}

} // namespace

double radial_quadratic_form(const RadialProfile& phi, double delta,
                             const StabilityParams& params) {
    params.validate();
    validate_profile(phi, params);
    const FormPieces f = form_pieces(phi, params);
    const double h2 = params.thickness * params.thickness;
    return 0.5 * params.young * params.thickness *
           (h2 / 12.0 * f.bend - 4.0 * delta * (1.0 + 2.0 * params.nu) * f.destab);
}

StabilityResult critical_strain(const StabilityParams& params) {
    params.validate();
    const int n = params.n_points;
    const double dr = params.radius / n;

    // Dense symmetric forms over the free nodes 0..n-1 (phi(R) = 0).
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);

    // Stencil of p_i and q_i in terms of nodal values (node n clamped).
    auto add_outer = [n](Eigen::MatrixXd& M, const std::pair<int, double>* sa, int na,
                         const std::pair<int, double>* sb, int nb, double wgt) {
        for (int a = 0; a < na; ++a)
            for (int b = 0; b < nb; ++b) {
                const auto [ia, ca] = sa[a];
                const auto [ib, cb] = sb[b];
                if (ia < n && ib < n) M(ia, ib) += wgt * ca * cb;
            }
    };

    for (int i = 0; i < n; ++i) {
        const double r = (i + 0.5) * dr;
        std::pair<int, double> P[2] = {{i, -1.0 / dr}, {i + 1, 1.0 / dr}};
        // q_i = (p_{i+1} - p_{i-1}) / (2 dr) with reflections at the ends.
        std::pair<int, double> Q[8];
        int nq = 0;
        auto add_p = [&](int k, double c) {
            if (k < 0) {  // p_{-1} = -p_0
                Q[nq++] = {0, c / dr};
                Q[nq++] = {1, -c / dr};
                return;
            }
            if (k > n - 1) {  // p_n = 2 p_{n-1} - p_{n-2}
                Q[nq++] = {n - 1, -2.0 * c / dr};
                Q[nq++] = {n, 2.0 * c / dr};
                Q[nq++] = {n - 2, c / dr};
                Q[nq++] = {n - 1, -c / dr};
                return;
            }
            Q[nq++] = {k, -c / dr};
            Q[nq++] = {k + 1, c / dr};
        };
        nq = 0;
        add_p(i + 1, 1.0 / (2.0 * dr));
        add_p(i - 1, -1.0 / (2.0 * dr));

        add_outer(D, P, 2, P, 2, dr * r);
        add_outer(B, Q, nq, Q, nq, dr * r);
        add_outer(B, P, 2, P, 2, dr / r);
        add_outer(B, P, 2, Q, nq, dr * params.nu);
        add_outer(B, Q, nq, P, 2, dr * params.nu);
    }

    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        0.5 * (B + B.transpose()), 0.5 * (D + D.transpose()));
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("critical_strain: generalized eigensolver failed");
    const double mu = solver.eigenvalues()(0);

    StabilityResult res;
    const double h2 = params.thickness * params.thickness;
    res.delta_crit = h2 / 12.0 * mu / (4.0 * (1.0 + 2.0 * params.nu));
    res.prefactor = res.delta_crit * params.radius * params.radius / h2;
    res.mode.assign(n + 1, 0.0);
    const Eigen::VectorXd v = solver.eigenvectors().col(0);
    double scale = 0.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(v(i)));
    for (int i = 0; i < n; ++i) res.mode[i] = v(i) / scale;
    res.mode[n] = 0.0;
    return res;
}

double buckling_estimate(double h, double R) {
    if (!(h > 0.0 && R > 0.0)) throw InvalidArgument("buckling_estimate: h and R must be > 0");
    return (h / R) * (h / R);
}

double compare_to_experiment(const StabilityParams& params, double delta_exp) {
    if (!(delta_exp > 0.0)) throw InvalidArgument("compare_to_experiment: delta_exp must be > 0");
    return delta_exp / critical_strain(params).delta_crit;
}

} // namespace delamina
