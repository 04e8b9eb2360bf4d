#include "s6p/g2.hpp"

#include <stdexcept>

#include "s6p/octonion.hpp"

namespace s6p {

namespace {

// vec(A) with variable order A[r][c] -> 7r + c.
QVec vectorize(const Mat7Q& a) {
  QVec v(49);
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) v[7 * r + c] = a[r][c];
  return v;
}

Mat7Q devectorize(const QVec& v) {
  Mat7Q a{};
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) a[r][c] = v[7 * r + c];
  return a;
}

// Rows: increasing triples (i<j<k); columns: the 49 entries of A. The row
// for (i,j,k) is the coefficient list of
//   sum_a A[a][i] eps(a,j,k) + A[a][j] eps(i,a,k) + A[a][k] eps(i,j,a).
QMatrix stabilizer_matrix() {
  QMatrix m(35, 49);
  int row = 0;
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      for (int k = j + 1; k <= 7; ++k, ++row)
        for (int a = 1; a <= 7; ++a) {
          m.at(row, 7 * (a - 1) + (i - 1)) += epsilon(a, j, k);
          m.at(row, 7 * (a - 1) + (j - 1)) += epsilon(i, a, k);
          m.at(row, 7 * (a - 1) + (k - 1)) += epsilon(i, j, a);
        }
  return m;
}

}  // namespace

Mat7Q bracket(const Mat7Q& a, const Mat7Q& b) {
  return mat_sub(matmul(a, b), matmul(b, a));
}

std::vector<Rational> stabilizer_residual(const Mat7Q& a) {
  std::vector<Rational> res;
  res.reserve(35);
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      for (int k = j + 1; k <= 7; ++k) {
        Rational s = 0;
        for (int l = 1; l <= 7; ++l) {
          s += a[l - 1][i - 1] * epsilon(l, j, k);
          s += a[l - 1][j - 1] * epsilon(i, l, k);
          s += a[l - 1][k - 1] * epsilon(i, j, l);
        }
        res.push_back(s);
      }
  return res;
}

bool annihilates_omega(const Mat7Q& a) {
  for (const Rational& r : stabilizer_residual(a))
    if (sgn(r) != 0) return false;
  return true;
}

G2Basis compute_g2_basis() {
  const std::vector<QVec> null = nullspace(stabilizer_matrix());
  if (null.size() != 14)
    throw std::logic_error("stabilizer nullspace dimension is not 14");

  G2Basis g2;
  g2.elements.reserve(14);
  for (const QVec& v : null) g2.elements.push_back(devectorize(v));

  // Structure constants by exact solves against the basis matrix.
  QMatrix basis_mat(49, 14);
  for (int c = 0; c < 14; ++c) {
    const QVec v = vectorize(g2.elements[c]);
    for (int r = 0; r < 49; ++r) basis_mat.at(r, c) = v[r];
  }
  g2.structure.assign(14, std::vector<QVec>(14));
  for (int i = 0; i < 14; ++i)
    for (int j = 0; j < 14; ++j) {
      if (j < i) {
        QVec neg = g2.structure[j][i];
        for (auto& x : neg) x = -x;
        g2.structure[i][j] = std::move(neg);
        continue;
      }
      if (i == j) {
        g2.structure[i][j] = QVec(14, Rational(0));
        continue;
      }
      const QVec rhs = vectorize(bracket(g2.elements[i], g2.elements[j]));
      auto sol = solve(basis_mat, rhs);
      if (!sol) throw std::logic_error("bracket does not close in g2");
      g2.structure[i][j] = std::move(*sol);
    }
  return g2;
}

bool structure_constants_satisfy_jacobi(const G2Basis& g2) {
  const int n = static_cast<int>(g2.elements.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational s = 0;
          for (int m = 0; m < n; ++m) {
            s += g2.structure[i][j][m] * g2.structure[m][k][l];
            s += g2.structure[j][k][m] * g2.structure[m][i][l];
            s += g2.structure[k][i][m] * g2.structure[m][j][l];
          }
          if (sgn(s) != 0) return false;
        }
  return true;
}

QMatrix killing_form(const G2Basis& g2) {
  const int n = static_cast<int>(g2.elements.size());
  QMatrix k(n, n);
  // (ad_i)_{lm} = c[i][m][l]; kappa_ij = sum_{m,l} c[i][m][l] c[j][l][m].
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational s = 0;
      for (int m = 0; m < n; ++m)
        for (int l = 0; l < n; ++l)
          s += g2.structure[i][m][l] * g2.structure[j][l][m];
      k.at(i, j) = s;
    }
  return k;
}

CartanPair cartan_subalgebra(const G2Basis& g2, std::uint64_t seed) {
  const int n = static_cast<int>(g2.elements.size());
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::mt19937_64 rng(seed + attempt);
    std::uniform_int_distribution<long> coeff(-9, 9);
    QVec c(n);
    Mat7Q xi{};
    for (int i = 0; i < n; ++i) {
      c[i] = rat(coeff(rng));
      xi = mat_add(xi, mat_scale(c[i], g2.elements[i]));
    }
    if (is_zero(xi)) continue;

    // Centralizer of xi inside g2: nullspace of d -> vec([xi, sum d_i xi_i]).
    QMatrix m(49, n);
    for (int j = 0; j < n; ++j) {
      const QVec col = vectorize(bracket(xi, g2.elements[j]));
      for (int r = 0; r < 49; ++r) m.at(r, j) = col[r];
    }
    const std::vector<QVec> cent = nullspace(m);
    if (cent.size() != 2) continue;  // non-regular draw

    CartanPair pair;
    pair.coords1 = cent[0];
    pair.coords2 = cent[1];
    pair.seed_used = seed + attempt;
    pair.h1 = Mat7Q{};
    pair.h2 = Mat7Q{};
    for (int i = 0; i < n; ++i) {
      pair.h1 = mat_add(pair.h1, mat_scale(cent[0][i], g2.elements[i]));
      pair.h2 = mat_add(pair.h2, mat_scale(cent[1][i], g2.elements[i]));
    }
    if (!is_zero(bracket(pair.h1, pair.h2))) continue;
    return pair;
  }
  throw std::runtime_error("no regular element found; exhausted retries");
}

PolyField fundamental_field(const Mat7Q& xi) {
  if (!annihilates_omega(xi))
    throw std::invalid_argument("matrix does not lie in g2");
  return PolyField::linear(xi);
}

TotallyRealWitness totally_real_witness(const G2Basis& g2, const Mat7Q& xi,
                                        std::span<const SpherePointQ> points) {
  if (points.size() < 4)
    throw std::invalid_argument("need at least 4 sample points");
  if (!annihilates_omega(xi))
    throw std::invalid_argument("matrix does not lie in g2");

  const int n = static_cast<int>(g2.elements.size());
  QMatrix a(7 * points.size(), n);
  QVec b(7 * points.size());
  for (std::size_t s = 0; s < points.size(); ++s) {
    const Vec7Q& p = points[s].coords();
    const Vec7Q rhs = cross(p, matvec(xi, p));
    for (int i = 0; i < 7; ++i) b[7 * s + i] = rhs[i];
    for (int j = 0; j < n; ++j) {
      const Vec7Q col = matvec(g2.elements[j], p);
      for (int i = 0; i < 7; ++i) a.at(7 * s + i, j) = col[i];
    }
  }

  TotallyRealWitness w;
  w.rank_coeff = rank(a);
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  w.rank_aug = rank(aug);
  w.consistent = (w.rank_aug == w.rank_coeff);
  if (w.consistent) {
    auto sol = solve(a, b);
    if (sol) w.solution = std::move(*sol);
  }
  return w;
}

Mat7Q random_g2_element(const G2Basis& g2, std::mt19937_64& rng) {
  Mat7Q xi{};
  for (const Mat7Q& e : g2.elements)
    xi = mat_add(xi, mat_scale(random_rational(rng, 5, 3), e));
  return xi;
}

}  // namespace s6p
