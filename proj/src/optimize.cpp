// optimize.cpp

#include "delamina/optimize.hpp"

#include <cmath>

#include "delamina/rng.hpp"

namespace delamina {

namespace {

// Clamp w to [0,inf) and zero Dirichlet rows of u and w.
void project(State& s, const BoundarySpec& bc) {
    for (double& w : s.w.v)
        if (w < 0.0) w = 0.0;
    impose_dirichlet(s, bc);
}

// Norm of the projected gradient mapping at unit step: P(x - grad) - x.
double projected_gradient_norm(const State& s, const State& grad, const BoundarySpec& bc) {
    State moved = state_axpy(s, -1.0, grad);
    project(moved, bc);
    return state_norm(state_axpy(moved, -1.0, s));
}

} // namespace

void MinimizeOptions::validate() const {
    if (max_iter < 1) throw InvalidArgument("MinimizeOptions: max_iter must be >= 1");
    if (!(grad_tol > 0.0)) throw InvalidArgument("MinimizeOptions: grad_tol must be > 0");
    if (!(initial_step > 0.0)) throw InvalidArgument("MinimizeOptions: initial_step must be > 0");
    if (!(backtrack > 0.0 && backtrack < 1.0))
        throw InvalidArgument("MinimizeOptions: backtrack factor must be in (0,1)");
    if (!(sufficient_decrease > 0.0 && sufficient_decrease < 1.0))
        throw InvalidArgument("MinimizeOptions: sufficient-decrease constant must be in (0,1)");
}

MinimizeResult minimize(const State& initial, const MinimizeOptions& options) {
    options.validate();
    Functional f{options.kind, options.params, options.boundary};

    MinimizeResult res;
    State x = initial;
    project(x, options.boundary);

    double fx = objective_value(f, x);
    res.energy_history.push_back(fx);
    State best = x;
    double fbest = fx;

    double step = options.initial_step;
    int it = 0;
    for (; it < options.max_iter; ++it) {
        State grad = discrete_gradient(f, x);
        const double pgnorm = projected_gradient_norm(x, grad, options.boundary);
        res.final_projected_gradient_norm = pgnorm;
        if (pgnorm <= options.grad_tol) {
            res.converged = true;
            break;
        }

        // Backtracking on the projected step.
        bool accepted = false;
        double t = step;
        for (int half = 0; half < 60; ++half) {
            State cand = state_axpy(x, -t, grad);
            project(cand, options.boundary);
            const State diff = state_axpy(cand, -1.0, x);
            const double decrease = -state_dot(grad, diff);
            const double fc = objective_value(f, cand);
            if (fc <= fx - options.sufficient_decrease * decrease && fc < fx) {
                x = cand;
                fx = fc;
                accepted = true;
                // Gentle step recovery keeps the search adaptive.
                step = t * 2.0;
                break;
            }
            t *= options.backtrack;
        }
        if (!accepted) {
            res.line_search_failed = true;
            break;
        }
        res.energy_history.push_back(fx);
        if (fx < fbest) {
            fbest = fx;
            best = x;
        }
    }
    res.iterations = it;
    res.state = best;
    res.energy = objective_breakdown(f, best);
    return res;
}

MinimizeResult minimize(const ConstructedState& initial, const MinimizeOptions& options) {
    return minimize(initial.state(), options);
}

double check_gradient(const State& state, FunctionalKind kind, const EnergyParams& params,
                      const BoundarySpec& boundary, std::uint64_t seed, int n_dirs) {
    Functional f{kind, params, boundary};
    const Grid& g = state.grid();
    State grad = discrete_gradient(f, state);
    Rng rng(seed);

    const double scale = 1.0 + state_norm(state);
    double worst = 0.0;
    for (int d = 0; d < n_dirs; ++d) {
        // Random smooth direction, zero on Dirichlet rows like the gradient.
        State dir(g);
        dir.u = random_smooth_vector(g, rng, 1.0);
        dir.w = random_smooth_scalar(g, rng, 1.0);
        impose_dirichlet(dir, boundary);
        const double dn = state_norm(dir);
        if (dn == 0.0) continue;

        const double t = 1e-6 * scale / dn;
        const double fp = objective_value(f, state_axpy(state, t, dir));
        const double fm = objective_value(f, state_axpy(state, -t, dir));
        const double fd = (fp - fm) / (2.0 * t);
        const double an = state_dot(grad, dir);
        const double denom = std::max({std::abs(fd), std::abs(an), 1e-12});
        const double rel = std::abs(fd - an) / denom;
        if (rel > worst) worst = rel;
    }
    return worst;
}

} // namespace delamina
