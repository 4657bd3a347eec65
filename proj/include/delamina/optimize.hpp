// optimize.hpp
// Projected gradient descent with Armijo backtracking for the discrete
// energies: steps along the negative gradient, clamps w to [0,inf) nodewise,
// re-imposes Dirichlet values, and keeps the best state seen.

#ifndef DELAMINA_OPTIMIZE_HPP
#define DELAMINA_OPTIMIZE_HPP

#include <cstdint>
#include <vector>

#include "delamina/construct.hpp"
#include "delamina/functional.hpp"

namespace delamina {

struct MinimizeOptions {
    int max_iter = 500;
    double grad_tol = 1e-6;
    double initial_step = 1.0;
    double backtrack = 0.5;            // step shrink factor, in (0,1)
    double sufficient_decrease = 1e-4; // Armijo constant, in (0,1)
    FunctionalKind kind = FunctionalKind::Fvk;
    EnergyParams params;
    BoundarySpec boundary;

    void validate() const;
};

struct MinimizeResult {
    State state;
    EnergyBreakdown energy;
    int iterations = 0;
    bool converged = false;
    bool line_search_failed = false;
    double final_projected_gradient_norm = 0.0;
    std::vector<double> energy_history;  // accepted objective values, nonincreasing
};

MinimizeResult minimize(const ConstructedState& initial, const MinimizeOptions& options);
MinimizeResult minimize(const State& initial, const MinimizeOptions& options);

// Max over n_dirs random directions of the relative error between the
// analytic directional derivative and a central finite difference.
double check_gradient(const State& state, FunctionalKind kind, const EnergyParams& params,
                      const BoundarySpec& boundary, std::uint64_t seed = 7771,
                      int n_dirs = 32);

} // namespace delamina

#endif
