// energy.hpp
// The variational energies: scalar fold functional, vector plate energy with
// and without bonding, the general plate form with Poisson coupling, its
// linearization about the flat state, and the 3D stored-energy evaluation.

#ifndef DELAMINA_ENERGY_HPP
#define DELAMINA_ENERGY_HPP

#include <vector>

#include "delamina/grid.hpp"
#include "delamina/ops.hpp"

namespace delamina {

struct EnergyParams {
    double sigma = 0.01;      // plate parameter, > 0
    double gamma = 1.0;       // bonding energy per unit area, >= 0
    double nu = 0.0;          // Poisson ratio in [-1, 1/2]
    double young = 1.0;       // Young modulus, > 0
    double thickness = 0.01;  // film thickness, > 0
    double eigenstrain = 0.1; // compression, in (0,1)
    double eta = 1e-6;        // debonding threshold, > 0

    void validate() const;
    // Default threshold tied to the domain size.
    static double default_eta(const Grid& g) {
        return 1e-6 * (g.lx > g.ly ? g.lx : g.ly);
    }
};

struct EnergyBreakdown {
    double stretch = 0.0;
    double bend = 0.0;
    double bond = 0.0;
    double total = 0.0;
};

struct FoldSegment {
    double length = 0.0;          // > 0
    double jump_magnitude = 0.0;  // |[Dw]| across the fold, >= 0
};

struct FoldSet {
    std::vector<FoldSegment> segments;
};

// Deformation v : Omega x (0,h) -> R^3 sampled on (nx+1) x (ny+1) x (nz+1) nodes.
struct DeformationField3D {
    Grid grid;
    int nz = 0;
    double thickness = 0.0;
    std::vector<double> x, y, z;  // components, index = (k*npy + j)*npx + i

    DeformationField3D() = default;
    DeformationField3D(const Grid& g, int nz_, double h);

    std::size_t idx(int i, int j, int k) const {
        return (std::size_t(k) * grid.npy() + j) * grid.npx() + i;
    }
    std::size_t nodes() const { return grid.nodes() * std::size_t(nz + 1); }
    double dz() const { return thickness / nz; }
};

// integral of (|Dw|^2-1)^2 (stretch slot) + sigma^2 |D^2 w|^2 (bend slot).
EnergyBreakdown eikonal_energy(const ScalarField& w, double sigma);

// (1/3) sum of jump^3 * length over the fold segments.
double fold_energy(const FoldSet& folds);

// integral of |Du+Du^T+Dw(x)Dw-Id|^2 + sigma^2 |D^2 w|^2.
EnergyBreakdown fvk_energy(const VectorField2& u, const ScalarField& w, double sigma);

// (1/2) Y h integral of (1-nu)|eps|^2 + nu (Tr eps)^2
//   + (h^2/12) [ (1-nu)|D^2w|^2 + nu (Lap w)^2 ],  eps = Du+Du^T+Dw(x)Dw-2*delta*Id.
EnergyBreakdown fvk_general_energy(const VectorField2& u, const ScalarField& w,
                                   const EnergyParams& p);

// fvk_energy plus gamma * |{w > eta}| measured with the trapezoid weights.
EnergyBreakdown bonded_energy(const VectorField2& u, const ScalarField& w, double sigma,
                              double gamma, double eta);

// Differentiable surrogate: bond term gamma * integral of min(w/eta, 1).
double bonded_energy_smooth(const VectorField2& u, const ScalarField& w, double sigma,
                            double gamma, double eta);

// Linearization of the general plate energy about u=0, w=0; may be negative.
double linearized_energy(const VectorField2& u, const ScalarField& w, const EnergyParams& p);

// (1/h) integral over Omega x (0,h) of dist^2(Dv, SO(3)).
double energy_3d(const DeformationField3D& v);

// Frobenius distance of a 3x3 matrix to SO(3) (SVD with orientation fix).
double dist_to_so3(const double F[3][3]);

} // namespace delamina

#endif
