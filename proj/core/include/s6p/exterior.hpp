// Exact exterior calculus on R^7: differential forms and vector fields with
// polynomial coefficients. A k-form stores one Poly7 per strictly increasing
// index tuple; tuples are encoded as 7-bit masks (bit i-1 <=> dx^i), so the
// canonical ordering and the permutation signs reduce to bit arithmetic.
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "s6p/poly7.hpp"
#include "s6p/qlinalg.hpp"

namespace s6p {

using Mask = std::uint8_t;

int mask_degree(Mask m);
std::vector<int> mask_indices(Mask m);  // ascending, 1-based
Mask mask_of(std::initializer_list<int> indices);

// Sign of reordering dx^a ^ dx^b into ascending order; 0 if they overlap.
int wedge_sign(Mask a, Mask b);
// Sign (-1)^{r-1} for removing the r-th index of m (i must be set in m).
int removal_sign(Mask m, int i);

class PolyField;

class PolyForm {
 public:
  explicit PolyForm(int degree = 0);

  static PolyForm dx(int i);  // basis 1-form, i in 1..7
  // c * dx^{i1} ^ ... ^ dx^{ik} for strictly increasing indices.
  static PolyForm monomial(std::initializer_list<int> indices,
                           const Poly7& coeff);
  static PolyForm from_function(const Poly7& f);  // degree-0 form

  int degree() const { return degree_; }
  bool is_zero() const { return c_.empty(); }

  const std::map<Mask, Poly7>& terms() const { return c_; }
  // Zero polynomial when the tuple is absent.
  const Poly7& coeff(Mask m) const;

  void add_term(Mask m, const Poly7& coeff);

  PolyForm operator-() const;
  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator*(const Rational& c, const PolyForm& a);
  friend PolyForm operator*(const Poly7& f, const PolyForm& a);

  bool operator==(const PolyForm& o) const = default;

 private:
  int degree_;
  std::map<Mask, Poly7> c_;
};

// Vector field sum_i comp_i d/dx^i with polynomial components.
class PolyField {
 public:
  PolyField() = default;

  static PolyField constant(const Vec7Q& v);
  static PolyField coordinate(int i);      // d/dx^i
  static PolyField euler();                // sum x^i d/dx^i
  static PolyField linear(const Mat7Q& a); // x -> A x
  static PolyField identity();             // x -> x (same as euler)

  const Poly7& component(int i) const;     // i in 1..7
  Poly7& component(int i);

  bool is_zero() const;
  Vec7Q eval(const Vec7Q& x) const;

  PolyField operator-() const;
  PolyField& operator+=(const PolyField& o);
  PolyField& operator-=(const PolyField& o);
  friend PolyField operator+(PolyField a, const PolyField& b) { return a += b; }
  friend PolyField operator-(PolyField a, const PolyField& b) { return a -= b; }
  friend PolyField operator*(const Rational& c, const PolyField& v);
  friend PolyField operator*(const Poly7& f, const PolyField& v);

  bool operator==(const PolyField& o) const = default;

 private:
  std::array<Poly7, 7> comp_;
};

// Graded-commutative product; throws when deg(a)+deg(b) > 7.
PolyForm wedge(const PolyForm& a, const PolyForm& b);

// d; satisfies d(d(a)) = 0 and the graded Leibniz rule.
PolyForm exterior_derivative(const PolyForm& a);

// Interior product; throws on a degree-0 form.
PolyForm contract(const PolyField& v, const PolyForm& a);

// Multivector contraction i_{X1 ^ X2 ^ ...} = ... o i_{X2} o i_{X1}:
// the first listed field is contracted innermost (first).
PolyForm contract(std::span<const PolyField> fields, const PolyForm& a);

// Cartan formula i_v d + d i_v.
PolyForm lie_derivative(const PolyField& v, const PolyForm& a);

// [v, w] = (Dw)v - (Dv)w, computed by exact polynomial differentiation.
PolyField lie_bracket(const PolyField& v, const PolyField& w);

// Pointwise value a_p(v_1, ..., v_k); throws unless len(vectors) = deg(a).
Rational evaluate(const PolyForm& a, const Vec7Q& p,
                  std::span<const Vec7Q> vectors);

Rational poly_dot(const PolyField& v, const PolyField& w, const Vec7Q& x);

}  // namespace s6p
