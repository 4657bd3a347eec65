// ops.hpp
// Finite-difference operators, quadrature and mollification on node fields.
//
// First derivatives: second-order central in the interior, second-order
// one-sided on the boundary. Second derivatives: three-point interior
// stencil, four-point one-sided at the ends. The mixed derivative is the
// composition D1y(D1x f); 1D stencils along different axes commute, so the
// result is symmetric by construction and exact on quadratics everywhere.

#ifndef DELAMINA_OPS_HPP
#define DELAMINA_OPS_HPP

#include "delamina/grid.hpp"

namespace delamina {

// Nodewise derivative fields.
ScalarField deriv_x(const ScalarField& f);
ScalarField deriv_y(const ScalarField& f);
ScalarField deriv_xx(const ScalarField& f);
ScalarField deriv_yy(const ScalarField& f);
ScalarField deriv_xy(const ScalarField& f);

// Adjoints of the stencil operators w.r.t. the plain nodal dot product,
// used to assemble exact gradients of the discrete energies.
ScalarField deriv_x_adjoint(const ScalarField& g);
ScalarField deriv_y_adjoint(const ScalarField& g);
ScalarField deriv_xx_adjoint(const ScalarField& g);
ScalarField deriv_yy_adjoint(const ScalarField& g);
ScalarField deriv_xy_adjoint(const ScalarField& g);

VectorField2 gradient(const ScalarField& f);
SymTensorField hessian(const ScalarField& f);

// strain = Du + Du^T + Dw (x) Dw - 2*eigenstrain*Id evaluated nodewise.
SymTensorField strain(const VectorField2& u, const ScalarField& w, double eigenstrain);

// Composite trapezoidal rule; fixed row-major order with compensated
// summation so the value is independent of everything but the input bits.
double integrate(const ScalarField& f);

// Trapezoid weight of node (i,j), i.e. dx*dy*wx(i)*wy(j).
double quad_weight(const Grid& g, int i, int j);

// Exact distance to the rectangle boundary: min over the four edges.
ScalarField distance_to_boundary(const Grid& g);

// Signed distance of the rectangle, negative outside; defined on all of R^2.
double signed_distance(const Grid& g, double x, double y);

// Convolution with the normalized compact bump (1 - r^2/sigma^2)^3. Near the
// boundary the kernel is clipped to the domain and renormalized per node, so
// constants are reproduced everywhere. Requires sigma >= 2*spacing.
ScalarField mollify(const ScalarField& f, double sigma);

double field_min(const ScalarField& f);
double field_max(const ScalarField& f);
bool field_finite(const ScalarField& f);

} // namespace delamina

#endif
