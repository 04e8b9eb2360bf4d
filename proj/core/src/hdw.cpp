#include "s6p/hdw.hpp"

#include <array>

#include "s6p/octonion.hpp"

namespace s6p {

const PolyForm& theta_tilde() {
  static const PolyForm theta =
      rat(1, 3) * contract(PolyField::euler(), omega_tilde());
  return theta;
}

HDW1Solution hdw_dim1(const Mat7Q& xi) {
  HDW1Solution sol;
  sol.field = fundamental_field(xi);
  sol.hamiltonian = -contract(sol.field, theta_tilde());
  sol.residual = contract(sol.field, omega_tilde()) -
                 exterior_derivative(sol.hamiltonian);
  return sol;
}

HDW2Solution hdw_dim2(const Mat7Q& xi, const Mat7Q& eta) {
  HDW2Solution sol;
  sol.xi_field = fundamental_field(xi);
  sol.eta_field = fundamental_field(eta);
  const Mat7Q comm = bracket(xi, eta);
  if (!is_zero(comm)) throw NonCommutingError(comm);

  const std::array<PolyField, 2> pair{sol.xi_field, sol.eta_field};
  const PolyForm h = -contract(pair, theta_tilde());
  sol.hamiltonian = h.coeff(0);
  sol.residual = contract(pair, omega_tilde()) + exterior_derivative(h);
  return sol;
}

bool complete_dim1_solution_set_check(const Mat7Q& xi, const Poly7& f) {
  const HDW1Solution base = hdw_dim1(xi);
  const PolyForm gauged =
      base.hamiltonian + exterior_derivative(PolyForm::from_function(f));
  const PolyForm residual =
      contract(base.field, omega_tilde()) - exterior_derivative(gauged);
  return residual.is_zero();
}

PolyForm dim1_residual_form(const Mat7Q& xi) {
  const PolyField x = PolyField::linear(xi);
  const PolyForm h = -contract(x, theta_tilde());
  return contract(x, omega_tilde()) - exterior_derivative(h);
}

PolyForm dim2_residual_form(const Mat7Q& xi, const Mat7Q& eta) {
  const std::array<PolyField, 2> pair{PolyField::linear(xi),
                                      PolyField::linear(eta)};
  const PolyForm h = -contract(pair, theta_tilde());
  return contract(pair, omega_tilde()) + exterior_derivative(h);
}

Rational zero_hamiltonian_value(const Vec7Q& v, const Vec7Q& x,
                                const Vec7Q& w) {
  const Vec7Q xv = sub(v, scale(dot(v, x), x));  // projection field at x
  const Vec7Q jxv = cross(x, xv);
  return dot(cross(xv, jxv), w);
}

Rational zero_hamiltonian_residual(const Vec7Q& v, const SpherePointQ& p,
                                   const TangentVectorQ& w) {
  if (!(w.base() == p))
    throw std::invalid_argument("tangent vector based at a different point");
  return zero_hamiltonian_value(v, p.coords(), w.vec());
}

Vec7Q bracket_x_jx_unchecked(const Mat7Q& m, const SpherePointQ& p) {
  const PolyField x = PolyField::linear(m);
  const PolyField jx = cross(PolyField::identity(), x);
  return lie_bracket(x, jx).eval(p.coords());
}

Vec7Q bracket_x_jx_at(const Mat7Q& xi, const SpherePointQ& p) {
  if (!annihilates_omega(xi))
    throw std::invalid_argument("matrix does not lie in g2");
  return bracket_x_jx_unchecked(xi, p);
}

}  // namespace s6p
