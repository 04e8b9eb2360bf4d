#include "s6p/sphere.hpp"

#include <stdexcept>

namespace s6p {

SpherePointQ::SpherePointQ(const Vec7Q& coords) : p_(coords) {
  if (norm2(p_) != 1)
    throw std::invalid_argument("point does not have exact unit norm");
}

TangentVectorQ::TangentVectorQ(const SpherePointQ& base, const Vec7Q& vec)
    : base_(base), v_(vec) {
  if (sgn(dot(v_, base_.coords())) != 0)
    throw std::invalid_argument("vector is not tangent to the sphere");
}

SpherePointQ north_pole() {
  Vec7Q n{};
  n[0] = 1;
  return SpherePointQ(n);
}

SpherePointQ rational_sphere_point(const std::array<Rational, 6>& u) {
  Rational n2 = 0;
  for (const auto& x : u) n2 += x * x;
  const Rational d = 1 + n2;
  Vec7Q p;
  p[0] = (1 - n2) / d;
  for (int i = 0; i < 6; ++i) p[i + 1] = 2 * u[i] / d;
  return SpherePointQ(p);
}

SpherePointQ random_rational_sphere_point(std::mt19937_64& rng) {
  std::array<Rational, 6> u;
  for (auto& x : u) x = random_rational(rng, 3, 3);
  return rational_sphere_point(u);
}

Vec7Q random_rational_tangent(std::mt19937_64& rng, const SpherePointQ& p) {
  Vec7Q v;
  for (auto& x : v) x = random_rational(rng, 3, 3);
  return sub(v, scale(dot(v, p.coords()), p.coords()));
}

std::array<Vec7Q, 6> tangent_basis(const SpherePointQ& p) {
  // e_i - p_i p for i != pivot; independent whenever p_pivot != 0.
  int pivot = 0;
  for (int i = 0; i < 7; ++i)
    if (abs(p.coords()[i]) > abs(p.coords()[pivot])) pivot = i;
  std::array<Vec7Q, 6> basis;
  int k = 0;
  for (int i = 0; i < 7; ++i) {
    if (i == pivot) continue;
    Vec7Q e{};
    e[i] = 1;
    basis[k++] = sub(e, scale(p.coords()[i], p.coords()));
  }
  return basis;
}

PolyField tangent_projection_field(const Vec7Q& v) {
  Poly7 vdotx;
  for (int i = 0; i < 7; ++i)
    if (sgn(v[i]) != 0) vdotx += v[i] * Poly7::var(i + 1);
  PolyField f = PolyField::constant(v);
  f -= vdotx * PolyField::identity();
  return f;
}

bool is_tangent_field_on_sphere(const PolyField& f) {
  Poly7 pairing;
  for (int i = 1; i <= 7; ++i) pairing += f.component(i) * Poly7::var(i);
  return reduce_mod_sphere(pairing).is_zero();
}

TangentVectorQ J_at(const SpherePointQ& p, const TangentVectorQ& u) {
  if (!(u.base() == p))
    throw std::invalid_argument("tangent vector based at a different point");
  return TangentVectorQ(p, cross(p.coords(), u.vec()));
}

Vec7Q j_tilde(const Vec7Q& x, const Vec7Q& u) {
  const Rational n2 = norm2(x);
  if (sgn(n2) == 0) throw std::invalid_argument("j_tilde at the origin");
  Rational n;
  if (!rational_sqrt(n2, &n))
    throw std::domain_error("|x| is irrational; exact j_tilde unavailable");
  return scale(1 / n, cross(x, u));
}

TangentVectorQ nijenhuis_closed(const SpherePointQ& p, const TangentVectorQ& u,
                                const TangentVectorQ& v) {
  if (!(u.base() == p) || !(v.base() == p))
    throw std::invalid_argument("tangent vectors based at different points");
  const Vec7Q w = cross(p.coords(), cross(u.vec(), v.vec()));
  return TangentVectorQ(p, scale(rat(-4), w));
}

TangentVectorQ nijenhuis_oracle(const SpherePointQ& p, const Vec7Q& u,
                                const Vec7Q& v) {
  const PolyField y = tangent_projection_field(u);
  const PolyField z = tangent_projection_field(v);
  const PolyField id = PolyField::identity();
  const PolyField jy = cross(id, y);
  const PolyField jz = cross(id, z);

  const Vec7Q a = lie_bracket(jy, jz).eval(p.coords());
  const Vec7Q b = lie_bracket(jy, z).eval(p.coords());
  const Vec7Q c = lie_bracket(y, jz).eval(p.coords());
  const Vec7Q d = lie_bracket(y, z).eval(p.coords());

  Vec7Q r = sub(a, d);
  r = sub(r, cross(p.coords(), add(b, c)));
  return TangentVectorQ(p, r);
}

Rational round_metric(const TangentVectorQ& u, const TangentVectorQ& v) {
  if (!(u.base() == v.base()))
    throw std::invalid_argument("metric pairing across different base points");
  return dot(u.vec(), v.vec());
}

Rational omega_metric_residual(const SpherePointQ& p, const TangentVectorQ& u,
                               const TangentVectorQ& v,
                               const TangentVectorQ& w) {
  if (!(u.base() == p) || !(v.base() == p) || !(w.base() == p))
    throw std::invalid_argument("tangent vectors based at different points");
  const Rational omega = dot(cross(u.vec(), v.vec()), w.vec());
  const TangentVectorQ nj = nijenhuis_closed(p, u, v);
  const TangentVectorQ jw = J_at(p, w);
  return omega + rat(1, 4) * round_metric(nj, jw);
}

int nijenhuis_rank(const SpherePointQ& p) {
  const auto basis = tangent_basis(p);
  QMatrix m(7, 15);
  int col = 0;
  for (int r = 0; r < 6; ++r)
    for (int s = r + 1; s < 6; ++s, ++col) {
      const TangentVectorQ ur(p, basis[r]);
      const TangentVectorQ us(p, basis[s]);
      const Vec7Q val = nijenhuis_closed(p, ur, us).vec();
      for (int i = 0; i < 7; ++i) m.at(i, col) = val[i];
    }
  return static_cast<int>(rank(m));
}

}  // namespace s6p
