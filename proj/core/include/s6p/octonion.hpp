// Octonion arithmetic and the induced seven-dimensional cross product.
// The epsilon tensor (nonzero on the triples 123, 145, 167, 246, 275, 374,
// 365 and their permutations) is the single source of truth; the basis
// multiplication table is regenerated from it.
#pragma once

#include <array>
#include <span>

#include "s6p/exterior.hpp"
#include "s6p/qlinalg.hpp"
#include "s6p/rational.hpp"

namespace s6p {

// Totally antisymmetric; indices must lie in 1..7.
int epsilon(int i, int j, int k);

struct Octonion {
  std::array<Rational, 8> c{};  // c[0] real part, c[1..7] imaginary

  static Octonion basis(int i);  // e_i, i in 0..7
  static Octonion from_imaginary(const Vec7Q& v);

  Vec7Q imaginary() const;
  Rational norm2() const;

  bool operator==(const Octonion& o) const = default;
};

Octonion oct_add(const Octonion& a, const Octonion& b);
Octonion oct_sub(const Octonion& a, const Octonion& b);
Octonion oct_multiply(const Octonion& a, const Octonion& b);

// u x v = (uv - vu)/2 in the octonions, restricted to imaginary parts.
Vec7Q cross(const Vec7Q& u, const Vec7Q& v);

// epsilon-bilinear cross product of polynomial fields, (F x G)_k =
// sum epsilon_{ijk} F_i G_j; agrees with the octonionic product pointwise.
PolyField cross(const PolyField& f, const PolyField& g);

// The canonical 3-form w(u,v,w) = <u x v, w> with constant coefficients.
const PolyForm& omega_tilde();

// True iff v -> (i_v alpha) restricted to the span of `basis` has trivial
// kernel at p; rank computed exactly. Throws when the basis is degenerate.
bool is_two_plectic_at(const PolyForm& alpha, const Vec7Q& p,
                       std::span<const Vec7Q> basis);

namespace test_hooks {
// Emulates the erroneous printed products e5*e7 = -e7, e7*e5 = e7; used by
// the CLI to demonstrate that the composition-norm check catches them.
extern bool corrupt_multiplication_table;
}  // namespace test_hooks

}  // namespace s6p
