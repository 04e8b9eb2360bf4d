// Tangent calculus of the unit sphere in the imaginary octonions: the almost
// complex structure J_p(u) = p x u, its CR extension to R^7 \ {0}, the
// Nijenhuis tensor by closed formula and by an independent bracket oracle,
// and the round metric. Everything here runs on exact rationals.
#pragma once

#include <array>
#include <random>

#include "s6p/exterior.hpp"
#include "s6p/octonion.hpp"

namespace s6p {

class SpherePointQ {
 public:
  // Throws unless the coordinates have exact unit norm.
  explicit SpherePointQ(const Vec7Q& coords);

  const Vec7Q& coords() const { return p_; }
  bool operator==(const SpherePointQ& o) const { return p_ == o.p_; }

 private:
  Vec7Q p_;
};

class TangentVectorQ {
 public:
  // Throws unless <vec, base> = 0 exactly.
  TangentVectorQ(const SpherePointQ& base, const Vec7Q& vec);

  const SpherePointQ& base() const { return base_; }
  const Vec7Q& vec() const { return v_; }

 private:
  SpherePointQ base_;
  Vec7Q v_;
};

SpherePointQ north_pole();

// Inverse stereographic image ((1-|u|^2)/(1+|u|^2), 2u/(1+|u|^2)); exactly
// unit norm for every rational u.
SpherePointQ rational_sphere_point(const std::array<Rational, 6>& u);

SpherePointQ random_rational_sphere_point(std::mt19937_64& rng);
// Exact tangent vector at p (projection of a random rational 7-vector).
Vec7Q random_rational_tangent(std::mt19937_64& rng, const SpherePointQ& p);

// Six exact tangent vectors e_i - p_i p spanning T_p S^6.
std::array<Vec7Q, 6> tangent_basis(const SpherePointQ& p);

// X(x) = v - <v,x> x; restricts to the orthogonal projection of v on the
// sphere and is tangent to it as a polynomial identity.
PolyField tangent_projection_field(const Vec7Q& v);

// <F(x), x> lies in the ideal of the sphere, i.e. F is tangent along S^6.
bool is_tangent_field_on_sphere(const PolyField& f);

TangentVectorQ J_at(const SpherePointQ& p, const TangentVectorQ& u);

// (x/|x|) x u. Exact-only: throws when x = 0 or |x| is irrational.
Vec7Q j_tilde(const Vec7Q& x, const Vec7Q& u);

// N_J(u,v) = -4 Jtilde_p(u x v).
TangentVectorQ nijenhuis_closed(const SpherePointQ& p, const TangentVectorQ& u,
                                const TangentVectorQ& v);

// Independent route: extends u, v to polynomial tangent fields Y, Z, applies
// J as x x Y(x), and evaluates [JY,JZ] - J[JY,Z] - J[Y,JZ] - [Y,Z] at p with
// exact brackets. Agrees with nijenhuis_closed on the projected vectors.
TangentVectorQ nijenhuis_oracle(const SpherePointQ& p, const Vec7Q& u,
                                const Vec7Q& v);

// Round metric = Euclidean pairing of tangent representatives. Throws on a
// base-point mismatch.
Rational round_metric(const TangentVectorQ& u, const TangentVectorQ& v);

// omega_p(u,v,w) + (1/4) g(N_J(u,v), Jw); identically zero on the sphere.
Rational omega_metric_residual(const SpherePointQ& p, const TangentVectorQ& u,
                               const TangentVectorQ& v,
                               const TangentVectorQ& w);

// Rank of the induced map Lambda^2 T_p -> T_p; 6 at every point.
int nijenhuis_rank(const SpherePointQ& p);

}  // namespace s6p
