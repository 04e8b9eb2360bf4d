// The exceptional Lie algebra g2, computed exactly as the infinitesimal
// stabilizer of the canonical 3-form: the nullspace of the 35 x 49 system
// A -> w(A.,.,.) + w(.,A.,.) + w(.,.,A.) over the rationals. Provides the
// bracket, structure constants, a Cartan subalgebra, fundamental vector
// fields, and the totally-real inconsistency certificate.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "s6p/exterior.hpp"
#include "s6p/qlinalg.hpp"
#include "s6p/sphere.hpp"

namespace s6p {

struct G2Basis {
  // 14 antisymmetric rational matrices; the canonical reduced-echelon
  // nullspace basis for the fixed variable order A[0][0], A[0][1], ...
  std::vector<Mat7Q> elements;
  // structure[i][j] holds the coordinates of [xi_i, xi_j] in the basis.
  std::vector<std::vector<QVec>> structure;
};

Mat7Q bracket(const Mat7Q& a, const Mat7Q& b);

// The 35 stabilizer values, one per increasing triple (i<j<k).
std::vector<Rational> stabilizer_residual(const Mat7Q& a);
bool annihilates_omega(const Mat7Q& a);

// Exact; deterministic. Throws if the nullspace dimension is not 14 or the
// bracket fails to close (neither can happen for the built-in epsilon).
G2Basis compute_g2_basis();

// Jacobi identity on the structure constants, all triples, exact.
bool structure_constants_satisfy_jacobi(const G2Basis& g2);

// Killing form kappa(i,j) = tr(ad_i ad_j) from the structure constants.
QMatrix killing_form(const G2Basis& g2);

struct CartanPair {
  Mat7Q h1, h2;
  QVec coords1, coords2;  // coordinates in the g2 basis
  std::uint64_t seed_used = 0;
};

// Centralizer of a pseudo-random rational element; retries on non-generic
// draws and throws after too many. The returned pair commutes exactly.
CartanPair cartan_subalgebra(const G2Basis& g2, std::uint64_t seed);

// X_xi(x) = xi x; tangent to every sphere since xi is skew. Throws unless
// xi annihilates the canonical 3-form.
PolyField fundamental_field(const Mat7Q& xi);

struct TotallyRealWitness {
  bool consistent = false;
  QVec solution;               // meaningful when consistent
  std::size_t rank_coeff = 0;  // rank of the coefficient matrix
  std::size_t rank_aug = 0;    // rank of the augmented matrix
};

// Solves sum_i c_i (xi_i p) = p x (xi p) over all sample points. For any
// nonzero xi in g2 the system is inconsistent: J X_xi is never fundamental.
// Throws when fewer than 4 points are supplied.
TotallyRealWitness totally_real_witness(const G2Basis& g2, const Mat7Q& xi,
                                        std::span<const SpherePointQ> points);

// Random rational element of g2 (a small random combination of the basis).
Mat7Q random_g2_element(const G2Basis& g2, std::mt19937_64& rng);

}  // namespace s6p
