// construct.hpp
// Explicit low-energy states: tent and its mollification, the fully bonded
// flat state, straight-tube laminates, period-doubling branched tubes, the
// pleated blister for the fully debonded square, and the 2D -> 3D lift.

#ifndef DELAMINA_CONSTRUCT_HPP
#define DELAMINA_CONSTRUCT_HPP

#include <optional>
#include <string>

#include "delamina/energy.hpp"
#include "delamina/functional.hpp"
#include "delamina/grid.hpp"

namespace delamina {

struct LaminateParams {
    double period = 0.0;          // tube spacing, in (0, 1]
    double tube_width = 0.0;      // in (0, period]
    double boundary_layer = 0.0;  // interpolation depth at the clamped side

    void validate() const;
};

struct BranchingParams {
    int generations = 0;          // number of period-doubling steps
    double base_period = 0.0;     // finest period at the boundary
    std::vector<double> refinement_positions;  // depth of each doubling

    void validate() const;
};

struct ConstructedState {
    VectorField2 u;
    ScalarField w;
    double predicted_energy = 0.0;
    BoundarySpec boundary;
    std::string id;  // construction name for reports
    std::optional<LaminateParams> laminate_params;
    std::optional<BranchingParams> branching_params;

    State state() const {
        State s;
        s.u = u;
        s.w = w;
        return s;
    }
};

// w = distance to the rectangle boundary.
ScalarField tent(const Grid& g);

// Fold set of the rectangle tent: the four corner ridges (plus the central
// ridge when the rectangle is not square).
FoldSet tent_fold_set(const Grid& g);

// Smoothed tent: the signed distance (negative outside, evaluated in closed
// form beyond the grid) convolved with the sigma-bump; exactly zero on the
// boundary nodes, clamped to w >= 0 near the corners.
ScalarField mollified_tent(const Grid& g, double sigma);

// Fully bonded state u=0, w=0 with predicted energy 2.
ConstructedState flat(const Grid& g);

// Tube spacing/width/boundary layer from the power laws of the straight-tube
// energy estimate; clamped to tube_width <= period <= 1.
LaminateParams optimal_laminate_params(double sigma, double gamma);

// Straight debonded tubes normal to the clamped edge {x1=0}.
ConstructedState laminate(const Grid& g, double sigma, double gamma);

// Tubes whose period doubles away from the clamped edge.
ConstructedState branched_tubes(const Grid& g, double sigma, double gamma);

// Pleated tent on the fully debonded square: tangential folds of period
// base_period at the boundary coarsening inward by period doubling.
ConstructedState branched_blister(const Grid& g, double sigma);
ConstructedState branched_blister(const Grid& g, double sigma, const BranchingParams& bp);
BranchingParams default_blister_params(const Grid& g, double sigma);

// Debonded pleated state for the one-sided problem (small-gamma sweeps).
ConstructedState debonded_pleats(const Grid& g, double sigma, double gamma);

// v(x1,x2,x3) = (1-delta) [ psi + x3 n ] with psi the midplane map built from
// (u, w) and n the leading-order normal.
DeformationField3D lift_to_3d(const VectorField2& u, const ScalarField& w, double delta,
                              double h, int nz);

} // namespace delamina

#endif
