// Hamilton-de Donder-Weyl layer on the two-plectic sphere: the potential
// theta = (1/3) i_E omega, exact Hamiltonians and residuals in source
// dimensions one and two, zero-Hamiltonian bivectors, and the commutation
// [X, JX] = 0 for infinitesimal automorphisms.
//
// Sign conventions (n = 2): i_X omega = +dH for k = 1 and i_X omega = -dH
// for k = 2; multivector contraction is i_{X^Y} = i_Y o i_X.
#pragma once

#include "s6p/exterior.hpp"
#include "s6p/g2.hpp"
#include "s6p/sphere.hpp"

namespace s6p {

// Thrown by the dimension-2 solver; carries the offending exact bracket.
struct NonCommutingError : std::invalid_argument {
  explicit NonCommutingError(Mat7Q b)
      : std::invalid_argument("generators do not commute"),
        bracket_value(std::move(b)) {}
  Mat7Q bracket_value;
};

// theta = (1/3) i_E omega; d(theta) = omega exactly.
const PolyForm& theta_tilde();

struct HDW1Solution {
  PolyForm hamiltonian;  // 1-form -i_{X_xi} theta
  PolyField field;       // X_xi
  PolyForm residual;     // i_{X_xi} omega - d(hamiltonian); zero form
  HDW1Solution() : hamiltonian(1), residual(2) {}
};

struct HDW2Solution {
  Poly7 hamiltonian;       // function -i_{X_eta} i_{X_xi} theta
  PolyField xi_field, eta_field;
  PolyForm residual;       // i_{X_xi ^ X_eta} omega + d(hamiltonian); zero
  HDW2Solution() : residual(1) {}
};

// Throws unless xi lies in g2. The residual is the zero polynomial form on
// all of R^7, not merely along the sphere.
HDW1Solution hdw_dim1(const Mat7Q& xi);

// Throws NonCommutingError when [xi, eta] != 0, std::invalid_argument when
// either matrix is outside g2.
HDW2Solution hdw_dim2(const Mat7Q& xi, const Mat7Q& eta);

// Gauge freedom: (H_xi + df, X_xi) still has zero residual for any
// polynomial f.
bool complete_dim1_solution_set_check(const Mat7Q& xi, const Poly7& f);

// Residual forms without the membership / commutation gates; nonzero for
// matrices outside g2. Used by float-side drift diagnostics on rationalized
// generators and as negative controls.
PolyForm dim1_residual_form(const Mat7Q& xi);
PolyForm dim2_residual_form(const Mat7Q& xi, const Mat7Q& eta);

// omega(X(x), x x X(x), w) for X the tangent projection field of v,
// evaluated at an arbitrary x. Vanishes whenever |x| = 1.
Rational zero_hamiltonian_value(const Vec7Q& v, const Vec7Q& x,
                                const Vec7Q& w);

// The on-sphere specialization; identically zero.
Rational zero_hamiltonian_residual(const Vec7Q& v, const SpherePointQ& p,
                                   const TangentVectorQ& w);

// [X_xi, x x (xi x)] evaluated at p; the zero vector at every sphere point.
// Throws unless xi lies in g2.
Vec7Q bracket_x_jx_at(const Mat7Q& xi, const SpherePointQ& p);

// Same bracket for an arbitrary matrix, without the membership gate; used
// as the negative control for matrices outside g2.
Vec7Q bracket_x_jx_unchecked(const Mat7Q& m, const SpherePointQ& p);

}  // namespace s6p
