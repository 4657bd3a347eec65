// stability.hpp
// Linear stability of the flat film on a disc: radial reduction of the
// linearized plate functional, critical eigenstrain from a generalized
// eigenvalue problem, and the comparison against the applied strain.

#ifndef DELAMINA_STABILITY_HPP
#define DELAMINA_STABILITY_HPP

#include <vector>

#include "delamina/errors.hpp"

namespace delamina {

struct StabilityParams {
    double young = 1.0;     // > 0
    double thickness = 0.0; // > 0, length units
    double radius = 0.0;    // > 0, length units
    double nu = 0.0;        // in [-1, 1/2]; 1+2nu > 0 for a finite threshold
    int n_points = 256;     // radial grid size, >= 64

    void validate() const;
};

struct StabilityResult {
    double delta_crit = 0.0;  // critical eigenstrain
    double prefactor = 0.0;   // delta_crit * R^2 / h^2
    std::vector<double> mode; // radial profile phi(r) at the nodes
    double ratio_to_experiment = 0.0;  // delta_exp / delta_crit when supplied
};

// Radial profile sampled on n_points+1 uniform nodes over [0, R]; the value
// at r=R must vanish and the profile is even at the origin.
using RadialProfile = std::vector<double>;

// (1/2) Y h * integral over (0,R) of
//   [ -4 delta (1+2nu) phi'^2
//     + (h^2/12) ( phi''^2 + (phi'/r)^2 + 2 nu phi' phi''/r ) ] r dr.
// Midpoint sampling in r avoids the coordinate singularity; phi'/r at the
// innermost midpoint uses the phi''(0) limit implied by phi'(0)=0.
double radial_quadratic_form(const RadialProfile& phi, double delta,
                             const StabilityParams& params);

// Smallest delta at which the form loses positive definiteness over the
// discrete profile space, via the generalized eigenproblem between the
// bending and destabilizing parts.
StabilityResult critical_strain(const StabilityParams& params);

// The order-of-magnitude estimate h^2/R^2.
double buckling_estimate(double h, double R);

// delta_exp / delta_crit for the given parameters.
double compare_to_experiment(const StabilityParams& params, double delta_exp);

} // namespace delamina

#endif
