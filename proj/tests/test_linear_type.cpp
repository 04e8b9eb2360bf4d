#include <doctest.h>

#include <random>

#include "s6p/linear_type.hpp"
#include "s6p/octonion.hpp"
#include "s6p/sphere.hpp"

using namespace s6p;

namespace {

PolyForm const_form(std::initializer_list<int> idx, long c) {
  return PolyForm::monomial(idx, Poly7::constant(rat(c)));
}

Vec6Q e6(int i) {
  Vec6Q v{};
  v[i - 1] = 1;
  return v;
}

}  // namespace

TEST_CASE("omega_north in subspace coordinates") {
  // ambient dx^{i+1} <-> subspace dx^i
  PolyForm expect(3);
  expect += const_form({1, 3, 5}, 1);   // dx2^dx4^dx6
  expect += const_form({1, 4, 6}, -1);  // dx2^dx5^dx7
  expect += const_form({2, 3, 6}, -1);  // dx3^dx4^dx7
  expect += const_form({2, 4, 5}, -1);  // dx3^dx5^dx6
  CHECK(omega_north() == expect);
}

TEST_CASE("delta_quadratic") {
  const PolyForm omega_n = omega_north();
  CHECK(delta_quadratic(omega_n, Vec6Q{}).is_zero());
  // v = d2 ambient (first subspace vector): q(v) = 2 dx4^dx5^dx6^dx7,
  // i.e. 2 dx3456 in subspace labels.
  CHECK(delta_quadratic(omega_n, e6(1)) == const_form({3, 4, 5, 6}, 2));
  // nonzero v never lands in Delta for the north form
  std::mt19937_64 rng(41);
  for (int k = 0; k < 100; ++k) {
    Vec6Q v;
    bool zero = true;
    for (auto& x : v) {
      x = random_rational(rng);
      zero = zero && sgn(x) == 0;
    }
    if (zero) continue;
    CHECK_FALSE(delta_quadratic(omega_n, v).is_zero());
  }
}

TEST_CASE("dual_vector: the printed formula") {
  const PolyForm omega_n = omega_north();
  const PolyForm nu = volume6();

  // v = d2 (ambient) -> w = -2 d3, i.e. -2 e2 in subspace labels
  Vec6Q expect{};
  expect[1] = rat(-2);
  CHECK(dual_vector(omega_n, nu, e6(1)) == expect);

  CHECK(dual_vector(omega_n, nu, Vec6Q{}) == Vec6Q{});

  // w_v = 2 (v2, -v1, v4, -v3, v6, -v5) and linearity
  std::mt19937_64 rng(42);
  for (int k = 0; k < 50; ++k) {
    Vec6Q v, u;
    for (auto& x : v) x = random_rational(rng);
    for (auto& x : u) x = random_rational(rng);
    const Vec6Q w = dual_vector(omega_n, nu, v);
    Vec6Q expect2{};
    expect2[0] = 2 * v[1];
    expect2[1] = -2 * v[0];
    expect2[2] = 2 * v[3];
    expect2[3] = -2 * v[2];
    expect2[4] = 2 * v[5];
    expect2[5] = -2 * v[4];
    CHECK(w == expect2);

    const Rational a = random_rational(rng), b = random_rational(rng);
    Vec6Q av_bu;
    for (int i = 0; i < 6; ++i) av_bu[i] = a * v[i] + b * u[i];
    const Vec6Q wu = dual_vector(omega_n, nu, u);
    Vec6Q lin;
    for (int i = 0; i < 6; ++i) lin[i] = a * w[i] + b * wu[i];
    CHECK(dual_vector(omega_n, nu, av_bu) == lin);
  }

  // the defining property (i_v alpha) ^ alpha = i_{w_v} nu
  for (int k = 0; k < 10; ++k) {
    Vec6Q v;
    std::mt19937_64 r2(100 + k);
    for (auto& x : v) x = random_rational(r2);
    const Vec6Q w = dual_vector(omega_n, nu, v);
    const PolyForm lhs = wedge(contract(field_from_vec6(v), omega_n), omega_n);
    const PolyForm rhs = contract(field_from_vec6(w), nu);
    CHECK(lhs == rhs);
  }

  CHECK_THROWS_AS(dual_vector(omega_n, PolyForm(6), e6(1)),
                  std::invalid_argument);
}

TEST_CASE("delta triviality verdicts") {
  // omega_N: the three sum-of-squares coefficient pairs, then triviality
  const auto coeffs = vw_wedge_coefficients(omega_north());
  auto sos = [](int a, int b) {
    return rat(-2) * (Poly7::var(a) * Poly7::var(a) +
                      Poly7::var(b) * Poly7::var(b));
  };
  CHECK(coeffs.at(mask_of({1, 2})) == sos(1, 2));
  CHECK(coeffs.at(mask_of({3, 4})) == sos(3, 4));
  CHECK(coeffs.at(mask_of({5, 6})) == sos(5, 6));
  CHECK(delta_is_trivial(omega_north()) == DeltaVerdict::trivial);

  // product type: dx123 + dx456 has q(e1) = 0
  PolyForm product(3);
  product += const_form({1, 2, 3}, 1);
  product += const_form({4, 5, 6}, 1);
  CHECK(delta_quadratic(product, e6(1)).is_zero());
  CHECK(delta_is_trivial(product) == DeltaVerdict::nontrivial);

  // zero form: everything lies in Delta
  CHECK(delta_is_trivial(PolyForm(3)) == DeltaVerdict::nontrivial);
}

TEST_CASE("complex type certificate") {
  const Mat6Q j = j_north();
  // J^2 = -id
  const Mat6Q jj = matmul6(j, j);
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c)
      CHECK(jj[r][c] == (r == c ? rat(-1) : rat(0)));

  CHECK(certify_complex_type(omega_north(), j));
  Mat6Q minus_j = j;
  for (auto& row : minus_j)
    for (auto& x : row) x = -x;
  CHECK(certify_complex_type(omega_north(), minus_j));

  // an almost complex structure that is neither J nor -J must fail
  Mat6Q bad = j;
  for (int r = 0; r < 6; ++r) {
    bad[r][4] = -bad[r][4];
    bad[r][5] = -bad[r][5];
  }
  CHECK_FALSE(certify_complex_type(omega_north(), bad));

  // a non almost-complex input is rejected
  CHECK_THROWS_AS(certify_complex_type(omega_north(), Mat6Q{}),
                  std::invalid_argument);
}

TEST_CASE("contraction kernel at the north pole") {
  const PolyForm omega_n = omega_north();
  // v = d2 -> span{d2, d3}; v = d4 -> span{d4, d5} (ambient labels)
  auto spans = [&](const Vec6Q& v, int other) {
    const auto kernel = contraction_kernel(omega_n, v);
    REQUIRE(kernel.size() == 2);
    QMatrix m(3, 6);
    for (int i = 0; i < 6; ++i) {
      m.at(0, i) = kernel[0][i];
      m.at(1, i) = kernel[1][i];
      m.at(2, i) = v[i];
    }
    if (rank(m) != 2) return false;
    for (int i = 0; i < 6; ++i) m.at(2, i) = e6(other)[i];
    return rank(m) == 2;
  };
  CHECK(spans(e6(1), 2));
  CHECK(spans(e6(3), 4));

  // the kernel always contains v and J v
  std::mt19937_64 rng(43);
  for (int k = 0; k < 30; ++k) {
    Vec6Q v;
    for (auto& x : v) x = random_rational(rng);
    bool zero = true;
    for (const auto& x : v) zero = zero && sgn(x) == 0;
    if (zero) continue;
    const auto kernel = contraction_kernel(omega_n, v);
    REQUIRE(kernel.size() == 2);
    QMatrix m(4, 6);
    const Vec6Q jv = matvec6(j_north(), v);
    for (int i = 0; i < 6; ++i) {
      m.at(0, i) = kernel[0][i];
      m.at(1, i) = kernel[1][i];
      m.at(2, i) = v[i];
      m.at(3, i) = jv[i];
    }
    CHECK(rank(m) == 2);
  }

  CHECK_THROWS_AS(contraction_kernel(omega_n, Vec6Q{}),
                  std::invalid_argument);
}

TEST_CASE("Delta sampling at general tangent spaces") {
  // At points away from N the exact sum-of-squares argument is coordinate
  // specific, so triviality is checked by sampling: 10^4 random rational v
  // across 10 random points, q(v) != 0 whenever v != 0.
  std::mt19937_64 rng(44);
  int sampled = 0;
  for (int k = 0; k < 10; ++k) {
    const SpherePointQ p = random_rational_sphere_point(rng);
    const Subspace6 s{tangent_basis(p)};
    const PolyForm alpha = restrict_to_subspace(omega_tilde(), s, p.coords());
    CHECK(alpha.degree() == 3);
    CHECK_FALSE(alpha.is_zero());
    bool all_nonzero = true;
    for (int t = 0; t < 1000; ++t) {
      Vec6Q v;
      bool zero = true;
      for (auto& x : v) {
        x = random_rational(rng);
        zero = zero && sgn(x) == 0;
      }
      if (zero) continue;
      ++sampled;
      all_nonzero = all_nonzero && !delta_quadratic(alpha, v).is_zero();
    }
    CHECK(all_nonzero);
  }
  CHECK(sampled >= 9900);
}
