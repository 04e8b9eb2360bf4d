#include "s6p/qlinalg.hpp"

#include <stdexcept>

namespace s6p {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::size_t rref_in_place(QMatrix& m, std::vector<std::size_t>* pivot_cols) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t lead = 0;
  if (pivot_cols) pivot_cols->clear();
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t pivot = lead;
    while (pivot < rows && sgn(m.at(pivot, col)) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead)
      for (std::size_t j = col; j < cols; ++j)
        swap(m.at(pivot, j), m.at(lead, j));
    const Rational inv = 1 / m.at(lead, col);
    for (std::size_t j = col; j < cols; ++j) m.at(lead, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || sgn(m.at(i, col)) == 0) continue;
      const Rational f = m.at(i, col);
      for (std::size_t j = col; j < cols; ++j)
        m.at(i, j) -= f * m.at(lead, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++lead;
  }
  return lead;
}

std::size_t rank(QMatrix m) { return rref_in_place(m); }

std::vector<QVec> nullspace(const QMatrix& m) {
  QMatrix r = m;
  std::vector<std::size_t> pivots;
  rref_in_place(r, &pivots);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<QVec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVec v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -r.at(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> solve(const QMatrix& a, const QVec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: size mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> pivots;
  rref_in_place(aug, &pivots);
  for (std::size_t c : pivots)
    if (c == a.cols()) return std::nullopt;  // pivot in the rhs column
  QVec x(a.cols(), Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k)
    x[pivots[k]] = aug.at(k, a.cols());
  return x;
}

QMatrix transpose(const QMatrix& m) {
  QMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  return t;
}

QMatrix mul(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mul: size mismatch");
  QMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a.at(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

Rational dot(const Vec7Q& u, const Vec7Q& v) {
  Rational s = 0;
  for (int i = 0; i < 7; ++i) s += u[i] * v[i];
  return s;
}

Rational norm2(const Vec7Q& u) { return dot(u, u); }

Vec7Q add(const Vec7Q& u, const Vec7Q& v) {
  Vec7Q r;
  for (int i = 0; i < 7; ++i) r[i] = u[i] + v[i];
  return r;
}

Vec7Q sub(const Vec7Q& u, const Vec7Q& v) {
  Vec7Q r;
  for (int i = 0; i < 7; ++i) r[i] = u[i] - v[i];
  return r;
}

Vec7Q scale(const Rational& c, const Vec7Q& u) {
  Vec7Q r;
  for (int i = 0; i < 7; ++i) r[i] = c * u[i];
  return r;
}

bool is_zero(const Vec7Q& u) {
  for (const auto& x : u)
    if (sgn(x) != 0) return false;
  return true;
}

Mat7Q matmul(const Mat7Q& a, const Mat7Q& b) {
  Mat7Q c{};
  for (int i = 0; i < 7; ++i)
    for (int k = 0; k < 7; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (int j = 0; j < 7; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Mat7Q mat_sub(const Mat7Q& a, const Mat7Q& b) {
  Mat7Q c;
  for (int i = 0; i < 7; ++i) c[i] = sub(a[i], b[i]);
  return c;
}

Mat7Q mat_add(const Mat7Q& a, const Mat7Q& b) {
  Mat7Q c;
  for (int i = 0; i < 7; ++i) c[i] = add(a[i], b[i]);
  return c;
}

Mat7Q mat_scale(const Rational& c, const Mat7Q& a) {
  Mat7Q r;
  for (int i = 0; i < 7; ++i) r[i] = scale(c, a[i]);
  return r;
}

Vec7Q matvec(const Mat7Q& a, const Vec7Q& x) {
  Vec7Q y{};
  for (int i = 0; i < 7; ++i) y[i] = dot(a[i], x);
  return y;
}

Mat7Q transpose7(const Mat7Q& a) {
  Mat7Q t;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) t[i][j] = a[j][i];
  return t;
}

bool is_zero(const Mat7Q& a) {
  for (const auto& row : a)
    if (!is_zero(row)) return false;
  return true;
}

bool is_antisymmetric(const Mat7Q& a) {
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j <= i; ++j)
      if (a[i][j] != -a[j][i]) return false;
  return true;
}

}  // namespace s6p
