#include <doctest.h>

#include <random>

#include "s6p/octonion.hpp"
#include "s6p/serialize.hpp"
#include "s6p/sphere.hpp"

#include <json.hpp>

using namespace s6p;

namespace {

Octonion random_octonion(std::mt19937_64& rng) {
  Octonion o;
  for (auto& c : o.c) c = random_rational(rng, 9, 9);
  return o;
}

Vec7Q basis7(int i) {
  Vec7Q v{};
  v[i - 1] = 1;
  return v;
}

}  // namespace

TEST_CASE("epsilon: listed triples, antisymmetry, range") {
  CHECK(epsilon(1, 2, 3) == 1);
  CHECK(epsilon(1, 4, 5) == 1);
  CHECK(epsilon(1, 6, 7) == 1);
  CHECK(epsilon(2, 4, 6) == 1);
  CHECK(epsilon(2, 7, 5) == 1);
  CHECK(epsilon(3, 7, 4) == 1);
  CHECK(epsilon(3, 6, 5) == 1);
  CHECK(epsilon(2, 1, 3) == -1);
  CHECK(epsilon(1, 2, 4) == 0);
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j)
      for (int k = 1; k <= 7; ++k) {
        CHECK(epsilon(i, j, k) == -epsilon(j, i, k));
        CHECK(epsilon(i, j, k) == -epsilon(i, k, j));
        if (i == j || j == k || i == k) CHECK(epsilon(i, j, k) == 0);
      }
  CHECK_THROWS_AS(epsilon(0, 1, 2), std::out_of_range);
  CHECK_THROWS_AS(epsilon(1, 8, 2), std::out_of_range);
}

TEST_CASE("octonion products from the epsilon table") {
  auto e = [](int i) { return Octonion::basis(i); };
  CHECK(oct_multiply(e(1), e(2)) == e(3));
  // the printed table says e5 e7 = -e7; epsilon forces -e2
  Octonion m57 = oct_multiply(e(5), e(7));
  Octonion expect;
  expect.c[2] = rat(-1);
  CHECK(m57 == expect);
  Octonion m11 = oct_multiply(e(1), e(1));
  Octonion minus_one;
  minus_one.c[0] = rat(-1);
  CHECK(m11 == minus_one);
  // e0 is the identity
  std::mt19937_64 rng(31);
  const Octonion a = random_octonion(rng);
  CHECK(oct_multiply(e(0), a) == a);
  CHECK(oct_multiply(a, e(0)) == a);
}

TEST_CASE("composition norm, 500 random pairs") {
  std::mt19937_64 rng(32);
  for (int k = 0; k < 500; ++k) {
    const Octonion a = random_octonion(rng), b = random_octonion(rng);
    CHECK(oct_multiply(a, b).norm2() == a.norm2() * b.norm2());
  }
}

TEST_CASE("alternativity") {
  std::mt19937_64 rng(33);
  for (int k = 0; k < 100; ++k) {
    const Octonion a = random_octonion(rng), b = random_octonion(rng);
    const Octonion aa = oct_multiply(a, a);
    CHECK(oct_multiply(a, oct_multiply(a, b)) == oct_multiply(aa, b));
    CHECK(oct_multiply(oct_multiply(b, a), a) == oct_multiply(b, aa));
  }
}

TEST_CASE("cross product") {
  CHECK(cross(basis7(1), basis7(2)) == basis7(3));
  std::mt19937_64 rng(34);
  for (int k = 0; k < 100; ++k) {
    Vec7Q u, v;
    for (auto& x : u) x = random_rational(rng);
    for (auto& x : v) x = random_rational(rng);
    CHECK(is_zero(cross(u, u)));
    CHECK(sgn(dot(cross(u, v), u)) == 0);
    CHECK(sgn(dot(cross(u, v), v)) == 0);
    CHECK(cross(u, v) == sub(Vec7Q{}, cross(v, u)));
    // against the octonion commutator definition
    const Octonion uo = Octonion::from_imaginary(u);
    const Octonion vo = Octonion::from_imaginary(v);
    const Octonion comm = oct_sub(oct_multiply(uo, vo), oct_multiply(vo, uo));
    CHECK(scale(rat(2), cross(u, v)) == comm.imaginary());
    CHECK(sgn(comm.c[0]) == 0);
  }
}

TEST_CASE("omega_tilde values") {
  const Vec7Q origin{};
  const std::array<Vec7Q, 3> t246{basis7(2), basis7(4), basis7(6)};
  CHECK(evaluate(omega_tilde(), origin, t246) == rat(1));
  const std::array<Vec7Q, 3> repeated{basis7(1), basis7(1), basis7(2)};
  CHECK(evaluate(omega_tilde(), origin, repeated) == rat(0));
  // omega(u,v,w) = <u x v, w> for random rationals
  std::mt19937_64 rng(35);
  for (int k = 0; k < 50; ++k) {
    Vec7Q u, v, w;
    for (auto& x : u) x = random_rational(rng);
    for (auto& x : v) x = random_rational(rng);
    for (auto& x : w) x = random_rational(rng);
    const std::array<Vec7Q, 3> vecs{u, v, w};
    CHECK(evaluate(omega_tilde(), origin, vecs) == dot(cross(u, v), w));
  }
}

TEST_CASE("two-plectic tests") {
  std::array<Vec7Q, 7> full{};
  for (int i = 0; i < 7; ++i) full[i][i] = 1;
  std::mt19937_64 rng(36);
  Vec7Q p;
  for (auto& x : p) x = random_rational(rng);
  CHECK(is_two_plectic_at(omega_tilde(), p, full));
  CHECK_FALSE(is_two_plectic_at(PolyForm(3), p, full));

  const SpherePointQ north = north_pole();
  const auto tb = tangent_basis(north);
  CHECK(is_two_plectic_at(omega_tilde(), north.coords(), tb));

  // restricted to a too-small subspace the contraction develops kernel
  std::array<Vec7Q, 2> plane{basis7(2), basis7(3)};
  CHECK_FALSE(is_two_plectic_at(omega_tilde(), north.coords(), plane));

  std::array<Vec7Q, 3> degenerate{basis7(2), basis7(2), basis7(3)};
  CHECK_THROWS_AS(
      is_two_plectic_at(omega_tilde(), north.coords(), degenerate),
      std::invalid_argument);
}

TEST_CASE("corrupted multiplication table fails composition") {
  test_hooks::corrupt_multiplication_table = true;
  bool violated = false;
  std::mt19937_64 rng(37);
  for (int k = 0; k < 50 && !violated; ++k) {
    const Octonion a = random_octonion(rng), b = random_octonion(rng);
    violated = oct_multiply(a, b).norm2() != a.norm2() * b.norm2();
  }
  test_hooks::corrupt_multiplication_table = false;
  CHECK(violated);
}

TEST_CASE("regenerated multiplication table export") {
  const auto j = nlohmann::json::parse(multiplication_table_json());
  // spot checks against the epsilon-derived products
  CHECK(j["products"][0][1] == "e3");    // e1 e2
  CHECK(j["products"][4][6] == "-e2");   // e5 e7 (printed table erratum)
  CHECK(j["products"][6][4] == "e2");    // e7 e5
  CHECK(j["products"][3][3] == "-1");    // e4 e4
}
