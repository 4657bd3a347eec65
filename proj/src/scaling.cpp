// scaling.cpp

#include "delamina/scaling.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "delamina/io.hpp"
#include "delamina/optimize.hpp"

namespace delamina {

std::string to_string(Regime r) {
    switch (r) {
        case Regime::A: return "A";
        case Regime::B: return "B";
        case Regime::C: return "C";
        case Regime::D: return "D";
    }
    return "?";
}

std::string to_string(LowerRegime r) {
    switch (r) {
        case LowerRegime::A: return "A";
        case LowerRegime::Bp: return "B'";
        case LowerRegime::Dp: return "D'";
    }
    return "?";
}

namespace {

void check_range(double sigma, double gamma, const char* who) {
    if (!(sigma > 0.0 && sigma < 1.0))
        throw InvalidArgument(std::string(who) + ": sigma must be in (0,1)");
    if (!(gamma > 0.0)) throw InvalidArgument(std::string(who) + ": gamma must be > 0");
}

double regime_value(Regime r, double sigma, double gamma) {
    switch (r) {
        case Regime::A: return 1.0;
        case Regime::B: return std::pow(sigma * gamma, 0.4);
        case Regime::C: return std::sqrt(sigma) * std::pow(gamma, 0.625);
        case Regime::D: return sigma;
    }
    return 0.0;
}

} // namespace

Regime classify_regime(double sigma, double gamma) {
    check_range(sigma, gamma, "classify_regime");
    // Thresholds gamma = sigma^-1, sigma^-4/9, sigma^4/5 in decreasing order.
    const double tA = 1.0 / sigma;
    const double tB = std::pow(sigma, -4.0 / 9.0);
    const double tC = std::pow(sigma, 0.8);
    Regime r;
    if (gamma > tA) r = Regime::A;
    else if (gamma > tB) r = Regime::B;
    else if (gamma > tC) r = Regime::C;
    else if (gamma < tC) r = Regime::D;
    else r = Regime::C;  // gamma == tC
    // On a boundary the neighboring formulas agree up to constants; take the
    // smaller value, preferring the larger-gamma label on exact ties so that
    // vertical scans stay monotone.
    if (gamma == tA) r = regime_value(Regime::A, sigma, gamma) <=
                             regime_value(Regime::B, sigma, gamma) ? Regime::A : Regime::B;
    if (gamma == tB) r = regime_value(Regime::B, sigma, gamma) <=
                             regime_value(Regime::C, sigma, gamma) ? Regime::B : Regime::C;
    if (gamma == tC) r = regime_value(Regime::C, sigma, gamma) <=
                             regime_value(Regime::D, sigma, gamma) ? Regime::C : Regime::D;
    return r;
}

LowerRegime classify_lower_regime(double sigma, double gamma) {
    check_range(sigma, gamma, "classify_lower_regime");
    if (sigma * gamma > 1.0) return LowerRegime::A;
    if (gamma >= std::sqrt(sigma)) return LowerRegime::Bp;
    return LowerRegime::Dp;
}

double upper_bound_value(double sigma, double gamma) {
    return regime_value(classify_regime(sigma, gamma), sigma, gamma);
}

double lower_bound_value(double sigma, double gamma) {
    switch (classify_lower_regime(sigma, gamma)) {
        case LowerRegime::A: return 1.0;
        case LowerRegime::Bp: return std::pow(sigma * gamma, 2.0 / 3.0);
        case LowerRegime::Dp: return sigma;
    }
    return 0.0;
}

void SweepSpec::validate() const {
    if (points.empty()) throw InvalidArgument("SweepSpec: empty point list");
    for (const auto& [s, gm] : points) check_range(s, gm, "SweepSpec");
    if (grid_n < 8) throw InvalidArgument("SweepSpec: grid resolution too small");
    if (minimize_iters < 1) throw InvalidArgument("SweepSpec: minimize_iters must be >= 1");
}

namespace {

int worker_count(std::size_t njobs) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("DELAMINA_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && (unsigned long)cap < n) n = unsigned(cap);
    }
    return int(std::min<std::size_t>(n, njobs));
}

SweepRecord sweep_point(const SweepSpec& spec, double sigma, double gamma) {
    SweepRecord rec;
    rec.sigma = sigma;
    rec.gamma = gamma;
    rec.regime = classify_regime(sigma, gamma);

    Grid g(spec.grid_n, spec.grid_n);
    std::string kind = spec.construction;
    if (kind == "auto") {
        switch (rec.regime) {
            case Regime::A: kind = "flat"; break;
            case Regime::B: kind = "laminate"; break;
            case Regime::C: kind = "branched-tubes"; break;
            case Regime::D: kind = "debonded"; break;
        }
    }
    try {
        ConstructedState cs;
        if (kind == "flat") cs = flat(g);
        else if (kind == "laminate") cs = laminate(g, sigma, gamma);
        else if (kind == "branched-tubes") cs = branched_tubes(g, sigma, gamma);
        else if (kind == "debonded") cs = debonded_pleats(g, sigma, gamma);
        else throw InvalidArgument("run_sweep: unknown construction '" + kind + "'");
        rec.construction = cs.id;

        const double eta = EnergyParams::default_eta(g);
        rec.constructed = bonded_energy(cs.u, cs.w, sigma, gamma, eta);
        rec.energy = rec.constructed;

        if (spec.mode == SweepMode::ConstructMinimize) {
            MinimizeOptions opt;
            opt.kind = FunctionalKind::BondedSmooth;
            opt.max_iter = spec.minimize_iters;
            opt.grad_tol = 1e-8;
            opt.params.sigma = sigma;
            opt.params.gamma = gamma;
            opt.params.eta = eta;
            opt.boundary = cs.boundary;
            MinimizeResult mr = minimize(cs, opt);
            EnergyBreakdown relaxed =
                bonded_energy(mr.state.u, mr.state.w, sigma, gamma, eta);
            // The relaxation may not help the sharp functional; keep the best.
            if (relaxed.total <= rec.constructed.total) rec.energy = relaxed;
            rec.minimized = true;
        }
    } catch (const ResolutionError& e) {
        rec.resolved = false;
        rec.construction = kind;
        rec.note = e.what();
    } catch (const RegimeError& e) {
        rec.resolved = false;
        rec.construction = kind;
        rec.note = e.what();
    }
    return rec;
}

} // namespace

SweepResult run_sweep(const SweepSpec& spec) {
    spec.validate();
    SweepResult out;
    out.spec = spec;
    out.version = kVersion;
    out.records.resize(spec.points.size());

    const int nw = worker_count(spec.points.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= spec.points.size()) return;
            out.records[k] = sweep_point(spec, spec.points[k].first, spec.points[k].second);
        }
    };
    if (nw <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nw);
        for (int t = 0; t < nw; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return out;
}

FitResult fit_power_law(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) throw InvalidArgument("fit_power_law: need at least 3 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    const double n = double(points.size());
    std::vector<std::pair<double, double>> logs;
    logs.reserve(points.size());
    for (const auto& [x, y] : points) {
        if (!(x > 0.0 && y > 0.0))
            throw InvalidArgument("fit_power_law: points must be strictly positive");
        logs.emplace_back(std::log(x), std::log(y));
        sx += logs.back().first;
        sy += logs.back().second;
    }
    for (const auto& [lx, ly] : logs) {
        sxx += (lx - sx / n) * (lx - sx / n);
        sxy += (lx - sx / n) * (ly - sy / n);
        syy += (ly - sy / n) * (ly - sy / n);
    }
    if (!(sxx > 0.0)) throw InvalidArgument("fit_power_law: abscissae must not coincide");
    FitResult f;
    f.slope = sxy / sxx;
    f.intercept = sy / n - f.slope * sx / n;
    f.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    f.residual_max = 0.0;
    for (const auto& [lx, ly] : logs)
        f.residual_max = std::max(f.residual_max, std::abs(ly - (f.intercept + f.slope * lx)));
    return f;
}

PhaseDiagram phase_diagram(double sigma_min, double sigma_max, double gamma_min,
                           double gamma_max, int resolution) {
    if (!(sigma_min > 0.0 && sigma_max < 1.0 && sigma_min <= sigma_max))
        throw InvalidArgument("phase_diagram: sigma range must sit inside (0,1)");
    if (!(gamma_min > 0.0 && gamma_min <= gamma_max))
        throw InvalidArgument("phase_diagram: gamma range must be positive");
    if (resolution < 2) throw InvalidArgument("phase_diagram: resolution must be >= 2");

    PhaseDiagram p;
    p.sigma.resize(resolution);
    p.gamma.resize(resolution);
    for (int k = 0; k < resolution; ++k) {
        const double t = double(k) / (resolution - 1);
        p.sigma[k] = sigma_min * std::pow(sigma_max / sigma_min, t);
        p.gamma[k] = gamma_min * std::pow(gamma_max / gamma_min, t);
    }
    p.label.resize(std::size_t(resolution) * resolution);
    for (int jg = 0; jg < resolution; ++jg)
        for (int is = 0; is < resolution; ++is)
            p.label[std::size_t(jg) * resolution + is] = classify_regime(p.sigma[is], p.gamma[jg]);
    p.curve_ab.resize(resolution);
    p.curve_bc.resize(resolution);
    p.curve_cd.resize(resolution);
    for (int is = 0; is < resolution; ++is) {
        p.curve_ab[is] = 1.0 / p.sigma[is];
        p.curve_bc[is] = std::pow(p.sigma[is], -4.0 / 9.0);
        p.curve_cd[is] = std::pow(p.sigma[is], 0.8);
    }
    return p;
}

} // namespace delamina
