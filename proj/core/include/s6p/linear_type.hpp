// Linear-type analysis of 3-forms on a 6-dimensional space: the quadratic
// map v -> i_v(alpha) ^ i_v(alpha), the dual-vector construction against a
// volume form, complex-type certification and contraction kernels.
//
// Subspace forms are represented as constant-coefficient PolyForms in the
// first six coordinates; vectors in the subspace are Vec6Q. The tangent
// space at the north pole maps subspace coordinate i to ambient x^{i+1}.
#pragma once

#include <array>
#include <map>
#include <vector>

#include "s6p/exterior.hpp"

namespace s6p {

using Vec6Q = std::array<Rational, 6>;
using Mat6Q = std::array<Vec6Q, 6>;

struct Subspace6 {
  std::array<Vec7Q, 6> basis;  // ambient representatives, rank 6

  // T_N S^6 = e_1-perp with basis d/dx^2 .. d/dx^8... i.e. e_2..e_7.
  static Subspace6 tangent_at_north();
};

// The canonical volume dx^1 ^ ... ^ dx^6 on the subspace coordinates.
PolyForm volume6();

// The restriction of a constant-coefficient ambient k-form to the span of
// the subspace basis, expressed in subspace coordinates.
PolyForm restrict_to_subspace(const PolyForm& ambient, const Subspace6& s,
                              const Vec7Q& p);

// omega restricted to T_N S^6, in subspace coordinates.
const PolyForm& omega_north();

// J_N(u) = N x u as a matrix in subspace coordinates.
Mat6Q j_north();

PolyField field_from_vec6(const Vec6Q& v);

// q(v) = i_v(alpha) ^ i_v(alpha), a 4-form, quadratic in v.
PolyForm delta_quadratic(const PolyForm& alpha, const Vec6Q& v);

// The unique w with (i_v alpha) ^ alpha = i_w nu; linear in v. Throws when
// nu is not a nonzero multiple of the coordinate volume.
Vec6Q dual_vector(const PolyForm& alpha, const PolyForm& nu, const Vec6Q& v);

// Coefficients of v ^ w_v as quadratic polynomials in the six symbolic
// coordinates of v (stored in Poly7 variables 1..6), keyed by the 2-masks.
std::map<Mask, Poly7> vw_wedge_coefficients(const PolyForm& alpha);

enum class DeltaVerdict { trivial, nontrivial, undecided };

// Decides whether {v : q(v) = 0} = {0}. Triviality is certified by an exact
// positive-definite combination of the decoupled (diagonal) coefficients of
// v ^ w_v; non-triviality by an explicit nonzero zero of q. Forms where
// neither route lands are reported undecided rather than guessed.
DeltaVerdict delta_is_trivial(const PolyForm& alpha);

// True iff alpha(Ju,v,w) = alpha(u,Jv,w) = alpha(u,v,Jw) on all basis
// triples. Throws unless J*J = -identity.
bool certify_complex_type(const PolyForm& alpha, const Mat6Q& j);

// Exact basis of ker(w -> i_w i_v alpha); throws when v = 0.
std::vector<Vec6Q> contraction_kernel(const PolyForm& alpha, const Vec6Q& v);

Vec6Q matvec6(const Mat6Q& m, const Vec6Q& v);
Mat6Q matmul6(const Mat6Q& a, const Mat6Q& b);

}  // namespace s6p
