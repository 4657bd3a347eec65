// functional.hpp
// A uniform handle on the minimizable energies: scalar objective plus the
// exact gradient of the discrete value with respect to all nodal degrees of
// freedom (adjoints of the difference stencils), with Dirichlet rows zeroed.

#ifndef DELAMINA_FUNCTIONAL_HPP
#define DELAMINA_FUNCTIONAL_HPP

#include <string>

#include "delamina/energy.hpp"
#include "delamina/grid.hpp"

namespace delamina {

enum class FunctionalKind {
    Eikonal,       // depends on w only
    Fvk,
    FvkGeneral,
    BondedSmooth,  // fvk + ramp bond surrogate
    Linearized,
    Harmonic,      // integral of |Dw|^2; test and oracle support
};

FunctionalKind functional_kind_from_string(const std::string& s);
std::string to_string(FunctionalKind k);

struct State {
    VectorField2 u;
    ScalarField w;

    State() = default;
    explicit State(const Grid& g) : u(g), w(g) {}

    const Grid& grid() const { return w.grid; }
};

struct Functional {
    FunctionalKind kind = FunctionalKind::Fvk;
    EnergyParams params;
    BoundarySpec boundary;
};

// Scalar objective used by the optimizer (smooth surrogate for the bonded kind).
double objective_value(const Functional& f, const State& s);

// Reported breakdown for the same state (sharp bond term for the bonded kind).
EnergyBreakdown objective_breakdown(const Functional& f, const State& s);

// Exact gradient of the discrete objective; rows of Dirichlet nodes are zero.
State discrete_gradient(const Functional& f, const State& s);

// Euclidean inner product and norm over all degrees of freedom.
double state_dot(const State& a, const State& b);
double state_norm(const State& a);

// a + t*b
State state_axpy(const State& a, double t, const State& b);

// Zero u and w on Dirichlet edges of the spec.
void impose_dirichlet(State& s, const BoundarySpec& bc);

} // namespace delamina

#endif
