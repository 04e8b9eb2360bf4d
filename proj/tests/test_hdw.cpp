#include <doctest.h>

#include <random>

#include "s6p/hdw.hpp"
#include "s6p/octonion.hpp"

using namespace s6p;

namespace {

const G2Basis& g2() {
  static const G2Basis basis = compute_g2_basis();
  return basis;
}

Vec7Q basis7(int i) {
  Vec7Q v{};
  v[i - 1] = 1;
  return v;
}

}  // namespace

TEST_CASE("the potential theta") {
  const PolyForm& theta = theta_tilde();
  CHECK(theta.degree() == 2);
  CHECK((exterior_derivative(theta) - omega_tilde()).is_zero());

  // theta at N on (e2, e3) = (1/3) omega(e1, e2, e3) = 1/3
  const std::array<Vec7Q, 2> e23{basis7(2), basis7(3)};
  CHECK(evaluate(theta, basis7(1), e23) == rat(1, 3));

  // i_E theta = (1/3) i_E i_E omega = 0
  CHECK(contract(PolyField::euler(), theta).is_zero());

  // the potential is g2-invariant: L_{X_xi} theta = 0 exactly
  for (const auto& xi : g2().elements)
    CHECK(lie_derivative(PolyField::linear(xi), theta).is_zero());
}

TEST_CASE("HDW in dimension one") {
  for (const auto& xi : g2().elements) {
    const HDW1Solution sol = hdw_dim1(xi);
    CHECK(sol.residual.is_zero());
    // sign convention: k=1, n=2 gives i_X omega = +dH
    CHECK((contract(sol.field, omega_tilde()) -
           exterior_derivative(sol.hamiltonian))
              .is_zero());
  }

  const HDW1Solution zero = hdw_dim1(Mat7Q{});
  CHECK(zero.hamiltonian.is_zero());
  CHECK(zero.residual.is_zero());

  Mat7Q not_g2{};
  not_g2[0][1] = 1;
  not_g2[1][0] = rat(-1);
  CHECK_THROWS_AS(hdw_dim1(not_g2), std::invalid_argument);
  // and its ungated residual form is nonzero (completeness falsification)
  CHECK_FALSE(dim1_residual_form(not_g2).is_zero());
}

TEST_CASE("gauge freedom of the dim-1 Hamiltonian") {
  CHECK(complete_dim1_solution_set_check(g2().elements[0], Poly7{}));
  CHECK(complete_dim1_solution_set_check(g2().elements[1], Poly7::var(2)));
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 5; ++trial) {
    Poly7 f;
    for (int i = 1; i <= 7; ++i)
      for (int j = i; j <= 7; ++j)
        f += random_rational(rng) * (Poly7::var(i) * Poly7::var(j));
    CHECK(complete_dim1_solution_set_check(g2().elements[trial], f));
  }
}

TEST_CASE("HDW in dimension two") {
  const CartanPair pair = cartan_subalgebra(g2(), 7);
  const HDW2Solution sol = hdw_dim2(pair.h1, pair.h2);
  CHECK(sol.residual.is_zero());
  CHECK(sol.hamiltonian.total_degree() == 3);
  // sign convention: k=2, n=2 gives i_Z omega = -dH
  const std::array<PolyField, 2> z{sol.xi_field, sol.eta_field};
  CHECK((contract(z, omega_tilde()) +
         exterior_derivative(PolyForm::from_function(sol.hamiltonian)))
            .is_zero());

  // repeated field: H = 0, residual 0
  const HDW2Solution rep = hdw_dim2(pair.h1, pair.h1);
  CHECK(rep.hamiltonian.is_zero());
  CHECK(rep.residual.is_zero());

  // degenerate pair (xi, 0): Z = 0 and H = 0
  const HDW2Solution degen = hdw_dim2(pair.h1, Mat7Q{});
  CHECK(degen.hamiltonian.is_zero());
  CHECK(degen.residual.is_zero());

  // non-commuting pairs are rejected with the exact bracket attached
  bool found = false;
  for (int i = 0; i < 14 && !found; ++i)
    for (int j = i + 1; j < 14 && !found; ++j) {
      const Mat7Q br = bracket(g2().elements[i], g2().elements[j]);
      if (is_zero(br)) continue;
      found = true;
      try {
        hdw_dim2(g2().elements[i], g2().elements[j]);
        CHECK(false);
      } catch (const NonCommutingError& e) {
        CHECK(is_zero(mat_sub(e.bracket_value, br)));
      }
    }
  CHECK(found);
}

TEST_CASE("zero-Hamiltonian bivectors") {
  std::mt19937_64 rng(82);
  for (int k = 0; k < 100; ++k) {
    const SpherePointQ p = random_rational_sphere_point(rng);
    Vec7Q v;
    for (auto& x : v) x = random_rational(rng, 3, 3);
    const TangentVectorQ w(p, random_rational_tangent(rng, p));
    CHECK(zero_hamiltonian_residual(v, p, w) == rat(0));
  }

  // v parallel to p projects to zero
  const SpherePointQ north = north_pole();
  const TangentVectorQ w(north, basis7(2));
  CHECK(zero_hamiltonian_residual(scale(rat(3), basis7(1)), north, w) ==
        rat(0));

  // off-sphere control: x = 2 e1, v = e2, w = e1 gives exactly 2
  CHECK(zero_hamiltonian_value(basis7(2), scale(rat(2), basis7(1)),
                               basis7(1)) == rat(2));
}

TEST_CASE("[X, JX] vanishes on the sphere for g2 generators") {
  std::mt19937_64 rng(83);
  std::vector<SpherePointQ> pts;
  for (int k = 0; k < 20; ++k) pts.push_back(random_rational_sphere_point(rng));

  for (const auto& xi : g2().elements)
    for (const auto& p : pts) CHECK(is_zero(bracket_x_jx_at(xi, p)));

  CHECK(is_zero(bracket_x_jx_at(Mat7Q{}, north_pole())));

  // negative control: a random skew matrix outside g2
  Mat7Q skew{};
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) {
      skew[i][j] = random_rational(rng);
      skew[j][i] = -skew[i][j];
    }
  REQUIRE_FALSE(annihilates_omega(skew));
  CHECK_THROWS_AS(bracket_x_jx_at(skew, north_pole()), std::invalid_argument);
  bool nonzero = false;
  for (const auto& p : pts)
    nonzero = nonzero || !is_zero(bracket_x_jx_unchecked(skew, p));
  CHECK(nonzero);
}

TEST_CASE("[X, JX] lies in the sphere ideal componentwise") {
  // stronger than pointwise: each component of the bracket reduces to zero
  // modulo |x|^2 - 1 for g2 generators.
  for (int k : {0, 5, 13}) {
    const PolyField x = PolyField::linear(g2().elements[k]);
    const PolyField jx = cross(PolyField::identity(), x);
    const PolyField br = lie_bracket(x, jx);
    for (int i = 1; i <= 7; ++i)
      CHECK(reduce_mod_sphere(br.component(i)).is_zero());
  }
}
