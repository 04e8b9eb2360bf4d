// Sparse multivariate polynomials in the coordinates x^1..x^7, with exact
// rational coefficients. Terms are kept in a canonical order (lexicographic
// exponent vectors) and zero coefficients are never stored.
#pragma once

#include <array>
#include <cstdint>
#include <map>

#include "s6p/qlinalg.hpp"
#include "s6p/rational.hpp"

namespace s6p {

using Exponents = std::array<std::uint8_t, 7>;

class Poly7 {
 public:
  Poly7() = default;

  static Poly7 constant(const Rational& c);
  static Poly7 var(int i);  // x^i, i in 1..7

  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;

  const std::map<Exponents, Rational>& terms() const { return terms_; }

  // Adds c * x^e, dropping the term if the sum cancels.
  void add_term(const Exponents& e, const Rational& c);

  Poly7 operator-() const;
  Poly7& operator+=(const Poly7& o);
  Poly7& operator-=(const Poly7& o);

  friend Poly7 operator+(Poly7 a, const Poly7& b) { return a += b; }
  friend Poly7 operator-(Poly7 a, const Poly7& b) { return a -= b; }
  friend Poly7 operator*(const Poly7& a, const Poly7& b);
  friend Poly7 operator*(const Rational& c, const Poly7& p);

  Poly7 derivative(int i) const;  // d/dx^i, i in 1..7
  Rational eval(const Vec7Q& x) const;

  bool operator==(const Poly7& o) const = default;

 private:
  std::map<Exponents, Rational> terms_;
};

// Euclidean division remainder modulo the sphere polynomial x.x - 1, taken
// monic in x^7. The remainder is zero exactly when the input lies in the
// ideal generated by x.x - 1, i.e. vanishes on every sphere of radius 1.
Poly7 reduce_mod_sphere(const Poly7& p);

}  // namespace s6p
