// Dense exact linear algebra over the rationals: reduced row echelon form,
// rank, nullspace and linear solves. Everything here is deterministic; the
// nullspace basis is the canonical free-column basis of the RREF.
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "s6p/rational.hpp"

namespace s6p {

using QVec = std::vector<Rational>;

class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  bool operator==(const QMatrix& o) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

// Returns the rank; optionally reports pivot columns in ascending row order.
std::size_t rref_in_place(QMatrix& m, std::vector<std::size_t>* pivot_cols = nullptr);

std::size_t rank(QMatrix m);

// Canonical basis of {x : Mx = 0}: one vector per free column of the RREF,
// with a 1 in the free coordinate.
std::vector<QVec> nullspace(const QMatrix& m);

// A particular solution of Ax = b with free variables set to zero, or
// nullopt when the system is inconsistent.
std::optional<QVec> solve(const QMatrix& a, const QVec& b);

QMatrix transpose(const QMatrix& m);
QMatrix mul(const QMatrix& a, const QMatrix& b);

// Fixed-size septuples for the ambient R^7.
using Vec7Q = std::array<Rational, 7>;
using Mat7Q = std::array<Vec7Q, 7>;  // row-major, m[i][j]

Rational dot(const Vec7Q& u, const Vec7Q& v);
Rational norm2(const Vec7Q& u);
Vec7Q add(const Vec7Q& u, const Vec7Q& v);
Vec7Q sub(const Vec7Q& u, const Vec7Q& v);
Vec7Q scale(const Rational& c, const Vec7Q& u);
bool is_zero(const Vec7Q& u);

Mat7Q matmul(const Mat7Q& a, const Mat7Q& b);
Mat7Q mat_sub(const Mat7Q& a, const Mat7Q& b);
Mat7Q mat_add(const Mat7Q& a, const Mat7Q& b);
Mat7Q mat_scale(const Rational& c, const Mat7Q& a);
Vec7Q matvec(const Mat7Q& a, const Vec7Q& x);
Mat7Q transpose7(const Mat7Q& a);
bool is_zero(const Mat7Q& a);
bool is_antisymmetric(const Mat7Q& a);

}  // namespace s6p
