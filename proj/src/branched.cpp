// branched.cpp
// Period-doubling constructions: the tube cascade for the bonded film and
// the pleated tent for the fully debonded square.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "delamina/construct.hpp"
#include "delamina/scaling.hpp"
#include "tube_profile.hpp"

namespace delamina {

using detail::smoothstep01;
using detail::tube_shape;
using detail::tube_shape_d;
using detail::tube_shape_integrals;

// ---------------------------------------------------------------------------
// Tube cascade (generations of tubes merging pairwise away from {x1=0}).
// ---------------------------------------------------------------------------

namespace {

struct CascadeLayout {
    double h0 = 0.0;                 // finest period, ly / (2^G * M)
    int G = 0;                       // doublings
    std::vector<double> zone_end;    // zone_end[g]: gen g ends here; size G+1, last = lx
    std::vector<double> width;       // tube width per generation, size G+1
    double eps_bl = 0.0;
    double merge_fraction = 0.55;    // trailing part of a zone used for the merge
};

CascadeLayout cascade_layout(const Grid& g, double sigma, double gamma) {
    CascadeLayout L;
    const double zone_ratio = std::pow(2.0, 4.0 / 3.0);
    const double c_first = 3.0;  // first zone ends at c_first * h0

    double h0 = std::max(std::sqrt(sigma) * std::pow(gamma, 0.625), 8.0 * sigma);
    h0 = std::max(h0, 6.0 * g.dy());
    h0 = std::min(h0, g.ly / 8.0);

    // Doublings that fit before the far side.
    int G = 0;
    {
        double end = c_first * h0;
        while (G < 12 && end * zone_ratio < 0.75 * g.lx && (h0 * double(1 << (G + 1))) <= g.ly / 2.0) {
            end *= zone_ratio;
            ++G;
        }
    }
    // Snap the finest period so the coarsest lattice still tiles ly.
    for (;;) {
        const int block = 1 << G;
        int m = int(std::lround(g.ly / (h0 * block)));
        if (m >= 2) {
            L.h0 = g.ly / double(block * m);
            break;
        }
        if (G == 0) {
            m = std::max(2, int(std::lround(g.ly / h0)));
            L.h0 = g.ly / double(m);
            break;
        }
        --G;
    }
    L.G = G;
    L.zone_end.resize(G + 1);
    double end = c_first * L.h0;
    for (int k = 0; k < G; ++k) {
        L.zone_end[k] = end;
        end *= zone_ratio;
    }
    L.zone_end[G] = g.lx;

    L.width.resize(G + 1);
    for (int k = 0; k <= G; ++k) {
        const double hg = L.h0 * double(1 << k);
        double w = detail::balanced_tube_width(sigma, gamma, hg);
        w = std::min(w, 0.45 * hg);
        L.width[k] = w;
    }
    if (L.width[0] < 4.0 * g.dy())
        throw ResolutionError("tube cascade: finest tube width below 4 grid cells");
    if (L.h0 < 4.0 * g.dy())
        throw ResolutionError("tube cascade: finest period below 4 grid cells");

    L.eps_bl = std::min(1.2 * L.h0, 0.8 * (1.0 - L.merge_fraction) * L.zone_end[0]);
    return L;
}

struct Bump {
    double center = 0.0;
    double width = 0.0;
    double absorb = 0.0;  // target integral of (dw/dy)^2
};

// Tubes present at depth x1. Inside a merge zone the pair slides toward its
// midpoint while the width blends toward the next generation.
std::vector<Bump> column_bumps(const CascadeLayout& L, const Grid& g, double x1) {
    int gen = 0;
    while (gen < L.G && x1 >= L.zone_end[gen]) ++gen;
    const double hg = L.h0 * double(1 << gen);
    const double zone_start = gen == 0 ? 0.0 : L.zone_end[gen - 1];
    const double zone_len = L.zone_end[gen] - zone_start;
    double morph = 0.0;
    if (gen < L.G) {
        const double mstart = L.zone_end[gen] - L.merge_fraction * zone_len;
        if (x1 >= mstart) morph = smoothstep01((x1 - mstart) / (L.zone_end[gen] - mstart));
    }

    std::vector<Bump> bumps;
    const int ntubes = int(std::lround(g.ly / hg));
    if (morph == 0.0) {
        bumps.reserve(ntubes);
        for (int m = 0; m < ntubes; ++m)
            bumps.push_back({(m + 0.5) * hg, L.width[gen], hg});
    } else {
        const double wnow = L.width[gen] + (L.width[gen + 1] - L.width[gen]) * morph;
        bumps.reserve(ntubes);
        for (int p = 0; p < ntubes / 2; ++p) {
            const double c1 = (2 * p + 0.5) * hg;
            const double c2 = (2 * p + 1.5) * hg;
            const double target = (2 * p + 1.0) * hg;
            bumps.push_back({c1 + (target - c1) * morph, wnow, hg});
            bumps.push_back({c2 + (target - c2) * morph, wnow, hg});
        }
    }
    return bumps;
}

// Evaluate one column: w values, analytic dw/dy, both with per-cluster
// amplitudes solved so the discrete absorption matches its target exactly.
void build_column(const Grid& g, const std::vector<Bump>& bumps, std::vector<double>& w,
                  std::vector<double>& dw) {
    const auto& I = tube_shape_integrals();
    w.assign(g.npy(), 0.0);
    dw.assign(g.npy(), 0.0);

    std::size_t b = 0;
    while (b < bumps.size()) {
        // Cluster of overlapping bumps.
        std::size_t e = b + 1;
        double lo = bumps[b].center - 0.5 * bumps[b].width;
        double hi = bumps[b].center + 0.5 * bumps[b].width;
        while (e < bumps.size() && bumps[e].center - 0.5 * bumps[e].width < hi) {
            hi = std::max(hi, bumps[e].center + 0.5 * bumps[e].width);
            lo = std::min(lo, bumps[e].center - 0.5 * bumps[e].width);
            ++e;
        }
        const int jlo = std::max(0, int(std::floor(lo / g.dy())) - 1);
        const int jhi = std::min(g.ny, int(std::ceil(hi / g.dy())) + 1);

        double target = 0.0;
        std::vector<double> cw(jhi - jlo + 1, 0.0), cd(jhi - jlo + 1, 0.0);
        for (std::size_t m = b; m < e; ++m) {
            const Bump& t = bumps[m];
            target += t.absorb;
            const double amp = std::sqrt(t.absorb * t.width / I.ib1);
            for (int j = jlo; j <= jhi; ++j) {
                const double xi = (g.y(j) - t.center) / t.width + 0.5;
                cw[j - jlo] += amp * tube_shape(xi);
                cd[j - jlo] += amp * tube_shape_d(xi) / t.width;
            }
        }
        // Discrete absorption of the cluster.
        double absorbed = 0.0;
        for (int j = jlo; j < jhi; ++j)
            absorbed += 0.5 * g.dy() * (cd[j - jlo] * cd[j - jlo] + cd[j + 1 - jlo] * cd[j + 1 - jlo]);
        const double scale = absorbed > 0.0 ? std::sqrt(target / absorbed) : 1.0;
        for (int j = jlo; j <= jhi; ++j) {
            w[j] += scale * cw[j - jlo];
            dw[j] += scale * cd[j - jlo];
        }
        b = e;
    }
}

ConstructedState tube_cascade(const Grid& g, double sigma, double gamma, const char* id) {
    const CascadeLayout L = cascade_layout(g, sigma, gamma);

    ConstructedState s;
    s.u = VectorField2(g);
    s.w = ScalarField(g, 0.0);
    s.boundary = BoundarySpec::left_dirichlet();
    s.id = id;

    std::vector<double> w, dw, u2(g.npy(), 0.0), u2_ref;
    for (int i = 0; i <= g.nx; ++i) {
        const double x1 = g.x(i);
        build_column(g, column_bumps(L, g, x1), w, dw);
        // u2' = (1 - (dw)^2)/2, trapezoid accumulation from the free edge y=0.
        u2[0] = 0.0;
        for (int j = 1; j <= g.ny; ++j) {
            const double a = 0.5 * (1.0 - dw[j - 1] * dw[j - 1]);
            const double b = 0.5 * (1.0 - dw[j] * dw[j]);
            u2[j] = u2[j - 1] + 0.5 * g.dy() * (a + b);
        }
        const bool in_layer = x1 < L.eps_bl;
        const double ramp = in_layer ? smoothstep01(x1 / L.eps_bl) : 1.0;
        if (in_layer && u2_ref.empty()) u2_ref = u2;  // columns identical in gen 0
        const std::vector<double>& u2use = in_layer ? u2_ref : u2;
        for (int j = 0; j <= g.ny; ++j) {
            const std::size_t k = g.idx(i, j);
            s.w.v[k] = ramp * w[j];
            s.u.y.v[k] = ramp * ramp * u2use[j];
            s.u.x.v[k] = 0.5 * x1;
        }
    }
    for (int j = 0; j <= g.ny; ++j) {
        const std::size_t k = g.idx(0, j);
        s.w.v[k] = 0.0;
        s.u.x.v[k] = 0.0;
        s.u.y.v[k] = 0.0;
    }

    BranchingParams bp;
    bp.generations = L.G;
    bp.base_period = L.h0;
    bp.refinement_positions.assign(L.zone_end.begin(), L.zone_end.end() - 1);
    s.branching_params = bp;
    return s;
}

} // namespace

ConstructedState branched_tubes(const Grid& g, double sigma, double gamma) {
    const Regime r = classify_regime(sigma, gamma);
    if (r != Regime::C)
        throw RegimeError("branched_tubes: (sigma,gamma) outside regime C");
    ConstructedState s = tube_cascade(g, sigma, gamma, "branched-tubes");
    s.predicted_energy = 8.0 * std::sqrt(sigma) * std::pow(gamma, 0.625);
    return s;
}

ConstructedState debonded_pleats(const Grid& g, double sigma, double gamma) {
    ConstructedState s = tube_cascade(g, sigma, gamma, "debonded");
    s.predicted_energy = 40.0 * sigma + gamma * 0.5 * g.area();
    return s;
}

// ---------------------------------------------------------------------------
// Pleated tent for the fully debonded square.
// ---------------------------------------------------------------------------

namespace {

struct BlisterTuning {
    double coarse_frac = 1.0 / 16.0;  // coarsest pleat period / min side
    double c0_sigma = 0.8;            // finest period >= c0 * sigma
    double min_cells = 8.0;           // finest period >= min_cells * spacing
    double c_a = 1.25;                // doubling g starts at depth c_a * lambda_{g+1}
    double c_tau = 1.0;               // transition depth = local (doubled) period
    double c_mu = 1.2;                // fold smoothing scale, * sigma
    double c_tap = 0.6;               // diagonal taper width, * local period
    double c_bl = 0.9;                // boundary layer depth, * base period
};

// Distance to the medial axis of the rectangle (the tent fold set).
double medial_axis_distance(const Grid& g, double x, double y) {
    const double L = std::max(g.lx, g.ly), S = std::min(g.lx, g.ly);
    // Work in coordinates where the long axis is x.
    double px = x, py = y;
    if (g.ly > g.lx) std::swap(px, py);
    auto seg_dist = [](double qx, double qy, double ax, double ay, double bx, double by) {
        const double vx = bx - ax, vy = by - ay;
        const double L2 = vx * vx + vy * vy;
        double t = L2 > 0.0 ? ((qx - ax) * vx + (qy - ay) * vy) / L2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        const double dx = qx - (ax + t * vx), dy = qy - (ay + t * vy);
        return std::sqrt(dx * dx + dy * dy);
    };
    const double h = S / 2.0;
    double d = seg_dist(px, py, 0.0, 0.0, h, h);
    d = std::min(d, seg_dist(px, py, 0.0, S, h, h));
    d = std::min(d, seg_dist(px, py, L, 0.0, L - h, h));
    d = std::min(d, seg_dist(px, py, L, S, L - h, h));
    d = std::min(d, seg_dist(px, py, h, h, L - h, h));
    return d;
}

struct PleatSchedule {
    double lambda0 = 0.0;
    int K = 0;                    // doublings
    std::vector<double> a;        // doubling start depths, size K
    std::vector<double> tau;      // transition extents, size K
    double s_bl = 0.0;
    double mu = 0.0;              // fold smoothing length
    BlisterTuning tune;

    // Pleat state at depth s: current fine lattice and the lift progress of
    // the odd valleys (0 outside transitions).
    void state(double s, double& lambda, double& lift) const {
        int done = 0;
        while (done < K && s >= a[done] + tau[done]) ++done;
        lambda = lambda0 * double(1 << done);
        lift = 0.0;
        if (done < K && s >= a[done])
            lift = smoothstep01((s - a[done]) / tau[done]);
    }
};

PleatSchedule make_schedule(const Grid& g, double sigma, const BranchingParams& bp,
                            const BlisterTuning& tune) {
    PleatSchedule sc;
    sc.tune = tune;
    sc.lambda0 = bp.base_period;
    sc.K = bp.generations;
    sc.a = bp.refinement_positions;
    sc.tau.resize(sc.K);
    for (int k = 0; k < sc.K; ++k)
        sc.tau[k] = tune.c_tau * sc.lambda0 * double(1 << (k + 1));
    sc.s_bl = tune.c_bl * sc.lambda0;
    sc.mu = std::max(tune.c_mu * sigma, 2.5 * g.spacing());
    return sc;
}

// Sharp pleat profile at tangential coordinate t: lower envelope of the
// valley cones |t - m*lambda| (+ lift for odd m during a doubling).
double pleat_sharp(double t, double lambda, double lift) {
    const double hmax = 1.1 * lambda;
    const int m0 = int(std::floor(t / lambda));
    double best = 1e300;
    for (int m = m0 - 1; m <= m0 + 2; ++m) {
        double f = std::abs(t - m * lambda);
        if (m & 1) f += hmax * lift;
        best = std::min(best, f);
    }
    return best;
}

} // namespace

BranchingParams default_blister_params(const Grid& g, double sigma) {
    BlisterTuning tune;
    const double side = std::min(g.lx, g.ly);
    const double coarse = side * tune.coarse_frac;
    const double fine_min = std::max(tune.c0_sigma * sigma, tune.min_cells * g.spacing());
    int K = 0;
    while (K < 8 && coarse / double(1 << (K + 1)) >= fine_min) ++K;
    BranchingParams bp;
    bp.base_period = coarse / double(1 << K);
    bp.generations = K;
    bp.refinement_positions.resize(K);
    for (int k = 0; k < K; ++k)
        bp.refinement_positions[k] = tune.c_a * bp.base_period * double(1 << (k + 1));
    return bp;
}

ConstructedState branched_blister(const Grid& g, double sigma, const BranchingParams& bp) {
    bp.validate();
    BlisterTuning tune;
    if (!(sigma > 0.0)) throw InvalidArgument("branched_blister: sigma must be > 0");
    if (bp.base_period < 4.0 * g.spacing())
        throw ResolutionError("branched_blister: finest period below 4 grid cells");

    const PleatSchedule sc = make_schedule(g, sigma, bp, tune);
    const double mu_base = std::max(1.0 * sigma, 2.0 * g.spacing());
    ScalarField base = mollified_tent(g, mu_base);

    ConstructedState out;
    out.u = VectorField2(g);
    out.w = base;
    out.boundary = BoundarySpec::all_dirichlet();
    out.id = "branched-blister";
    out.branching_params = bp;
    out.predicted_energy = 40.0 * sigma;

    // Owner facet of each node: 0=bottom,1=top,2=left,3=right.
    std::vector<std::int8_t> owner(g.nodes(), 0);
    for (int j = 0; j <= g.ny; ++j)
        for (int i = 0; i <= g.nx; ++i) {
            const double x = g.x(i), y = g.y(j);
            const double d[4] = {y, g.ly - y, x, g.lx - x};
            int best = 0;
            for (int f = 1; f < 4; ++f)
                if (d[f] < d[best]) best = f;
            owner[g.idx(i, j)] = std::int8_t(best);
        }

    // Per facet, per depth line: sharp profile along the tangent, discrete
    // smoothing on the fold scale, then the amplitude windows.
    std::vector<double> sharp, smooth;
    for (int facet = 0; facet < 4; ++facet) {
        const bool horizontal = facet < 2;  // tangent along x
        const int nt = horizontal ? g.nx : g.ny;
        const int ns = horizontal ? g.ny : g.nx;
        const double dt = horizontal ? g.dx() : g.dy();
        sharp.assign(nt + 1, 0.0);
        smooth.assign(nt + 1, 0.0);

        for (int lev = 1; lev <= ns; ++lev) {
            const double s = (horizontal ? g.dy() : g.dx()) * lev;
            if (s > 0.5 * (horizontal ? g.ly : g.lx) + 1e-12) break;
            double lambda, lift;
            sc.state(s, lambda, lift);
            // Any node of this line owned by the facet?
            bool any = false;
            for (int q = 0; q <= nt && !any; ++q) {
                const int i = horizontal ? q : (facet == 2 ? lev : g.nx - lev);
                const int j = horizontal ? (facet == 0 ? lev : g.ny - lev) : q;
                any = owner[g.idx(i, j)] == facet;
            }
            if (!any) continue;

            for (int q = 0; q <= nt; ++q) sharp[q] = pleat_sharp(q * dt, lambda, lift);

            // Quartic bump smoothing over the fold scale.
            const double mu = std::min(sc.mu, lambda / 5.0);
            const int rn = std::max(2, int(std::lround(mu / dt)));
            for (int q = 0; q <= nt; ++q) {
                double acc = 0.0, wsum = 0.0;
                for (int p = -rn; p <= rn; ++p) {
                    const double z = double(p) / rn;
                    const double wgt = (1.0 - z * z) * (1.0 - z * z);
                    const int qq = std::clamp(q + p, 0, nt);
                    acc += wgt * sharp[qq];
                    wsum += wgt;
                }
                smooth[q] = acc / wsum;
            }

            const double abl = smoothstep01(s / sc.s_bl);
            for (int q = 0; q <= nt; ++q) {
                const int i = horizontal ? q : (facet == 2 ? lev : g.nx - lev);
                const int j = horizontal ? (facet == 0 ? lev : g.ny - lev) : q;
                const std::size_t k = g.idx(i, j);
                if (owner[k] != facet) continue;
                const double rho = medial_axis_distance(g, g.x(i), g.y(j));
                const double ltap = std::max(tune.c_tap * lambda, 3.0 * mu_base);
                const double amp = abl * smoothstep01(rho / ltap);
                if (amp == 0.0) continue;
                const double p = amp * smooth[q];
                out.w.v[k] += p;
                switch (facet) {
                    case 0: out.u.y.v[k] -= p; break;  // bottom, normal +e2
                    case 1: out.u.y.v[k] += p; break;
                    case 2: out.u.x.v[k] -= p; break;  // left, normal +e1
                    case 3: out.u.x.v[k] += p; break;
                }
            }
        }
    }

    // Dirichlet boundary exactly zero.
    State st = out.state();
    impose_dirichlet(st, out.boundary);
    out.u = st.u;
    out.w = st.w;
    return out;
}

ConstructedState branched_blister(const Grid& g, double sigma) {
    return branched_blister(g, sigma, default_blister_params(g, sigma));
}

} // namespace delamina
