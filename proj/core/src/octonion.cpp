#include "s6p/octonion.hpp"

#include <stdexcept>

namespace s6p {

namespace test_hooks {
bool corrupt_multiplication_table = false;
}

namespace {

constexpr int kPositiveTriples[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7},
                                        {2, 4, 6}, {2, 7, 5}, {3, 7, 4},
                                        {3, 6, 5}};

struct EpsilonTable {
  int e[8][8][8] = {};
  EpsilonTable() {
    for (const auto& t : kPositiveTriples) {
      const int i = t[0], j = t[1], k = t[2];
      e[i][j][k] = e[j][k][i] = e[k][i][j] = 1;
      e[j][i][k] = e[i][k][j] = e[k][j][i] = -1;
    }
  }
};

const EpsilonTable& eps_table() {
  static const EpsilonTable t;
  return t;
}

}  // namespace

int epsilon(int i, int j, int k) {
  if (i < 1 || i > 7 || j < 1 || j > 7 || k < 1 || k > 7)
    throw std::out_of_range("epsilon indices must lie in 1..7");
  return eps_table().e[i][j][k];
}

Octonion Octonion::basis(int i) {
  if (i < 0 || i > 7) throw std::out_of_range("octonion basis index in 0..7");
  Octonion o;
  o.c[i] = 1;
  return o;
}

Octonion Octonion::from_imaginary(const Vec7Q& v) {
  Octonion o;
  for (int i = 0; i < 7; ++i) o.c[i + 1] = v[i];
  return o;
}

Vec7Q Octonion::imaginary() const {
  Vec7Q v;
  for (int i = 0; i < 7; ++i) v[i] = c[i + 1];
  return v;
}

Rational Octonion::norm2() const {
  Rational s = 0;
  for (const auto& x : c) s += x * x;
  return s;
}

Octonion oct_add(const Octonion& a, const Octonion& b) {
  Octonion r;
  for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

Octonion oct_sub(const Octonion& a, const Octonion& b) {
  Octonion r;
  for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

Octonion oct_multiply(const Octonion& a, const Octonion& b) {
  Octonion r;
  // Real-part contributions: e0 is the identity, e_i e_i = -1.
  r.c[0] = a.c[0] * b.c[0];
  for (int i = 1; i <= 7; ++i) {
    r.c[0] -= a.c[i] * b.c[i];
    r.c[i] += a.c[0] * b.c[i] + a.c[i] * b.c[0];
  }
  // Imaginary products e_i e_j = eps_ijk e_k for i != j.
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) {
      if (i == j) continue;
      const Rational prod = a.c[i] * b.c[j];
      if (sgn(prod) == 0) continue;
      if (test_hooks::corrupt_multiplication_table &&
          ((i == 5 && j == 7) || (i == 7 && j == 5))) {
        r.c[7] += (i == 5 ? -prod : prod);
        continue;
      }
      for (int k = 1; k <= 7; ++k) {
        const int e = eps_table().e[i][j][k];
        if (e == 1)
          r.c[k] += prod;
        else if (e == -1)
          r.c[k] -= prod;
      }
    }
  return r;
}

Vec7Q cross(const Vec7Q& u, const Vec7Q& v) {
  const Octonion uo = Octonion::from_imaginary(u);
  const Octonion vo = Octonion::from_imaginary(v);
  Octonion c = oct_sub(oct_multiply(uo, vo), oct_multiply(vo, uo));
  Vec7Q r = c.imaginary();
  const Rational half = rat(1, 2);
  for (auto& x : r) x *= half;
  return r;
}

PolyField cross(const PolyField& f, const PolyField& g) {
  PolyField r;
  for (int i = 1; i <= 7; ++i) {
    if (f.component(i).is_zero()) continue;
    for (int j = 1; j <= 7; ++j) {
      if (i == j || g.component(j).is_zero()) continue;
      for (int k = 1; k <= 7; ++k) {
        const int e = eps_table().e[i][j][k];
        if (e == 0) continue;
        Poly7 t = f.component(i) * g.component(j);
        if (e < 0) t = -t;
        r.component(k) += t;
      }
    }
  }
  return r;
}

const PolyForm& omega_tilde() {
  static const PolyForm form = [] {
    PolyForm w(3);
    for (int i = 1; i <= 7; ++i)
      for (int j = i + 1; j <= 7; ++j)
        for (int k = j + 1; k <= 7; ++k) {
          const int e = epsilon(i, j, k);
          if (e != 0)
            w.add_term(mask_of({i, j, k}), Poly7::constant(rat(e)));
        }
    return w;
  }();
  return form;
}

bool is_two_plectic_at(const PolyForm& alpha, const Vec7Q& p,
                       std::span<const Vec7Q> basis) {
  if (alpha.degree() != 3)
    throw std::invalid_argument("two-plectic test expects a 3-form");
  const std::size_t m = basis.size();
  if (m < 2) throw std::invalid_argument("basis too small");

  QMatrix b(m, 7);
  for (std::size_t t = 0; t < m; ++t)
    for (int i = 0; i < 7; ++i) b.at(t, i) = basis[t][i];
  if (rank(b) != m) throw std::invalid_argument("degenerate subspace basis");

  // Row per pair (r < s), column per basis vector t: alpha_p(b_t, b_r, b_s).
  QMatrix sys(m * (m - 1) / 2, m);
  std::size_t row = 0;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = r + 1; s < m; ++s, ++row)
      for (std::size_t t = 0; t < m; ++t) {
        const std::array<Vec7Q, 3> vecs{basis[t], basis[r], basis[s]};
        sys.at(row, t) = evaluate(alpha, p, vecs);
      }
  return rank(sys) == m;
}

}  // namespace s6p
