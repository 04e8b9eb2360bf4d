#include "s6p/linear_type.hpp"

#include <stdexcept>

#include "s6p/octonion.hpp"

namespace s6p {

namespace {

constexpr Mask kFullMask6 = 0x3f;

Vec7Q embed(const Vec6Q& v) {
  Vec7Q r{};
  for (int i = 0; i < 6; ++i) r[i] = v[i];
  return r;
}

bool is_constant_form6(const PolyForm& f) {
  for (const auto& [m, p] : f.terms()) {
    if (m & ~kFullMask6) return false;
    if (p.total_degree() > 0) return false;
  }
  return true;
}

}  // namespace

Subspace6 Subspace6::tangent_at_north() {
  Subspace6 s;
  for (int i = 0; i < 6; ++i) s.basis[i][i + 1] = 1;
  return s;
}

PolyForm volume6() {
  return PolyForm::monomial({1, 2, 3, 4, 5, 6}, Poly7::constant(1));
}

PolyForm restrict_to_subspace(const PolyForm& ambient, const Subspace6& s,
                              const Vec7Q& p) {
  const int k = ambient.degree();
  PolyForm r(k);
  // Enumerate increasing index tuples of length k over the 6 basis vectors.
  std::vector<int> idx(k);
  auto emit = [&](const std::vector<int>& tuple) {
    std::vector<Vec7Q> vecs;
    vecs.reserve(k);
    Mask m = 0;
    for (int i : tuple) {
      vecs.push_back(s.basis[i]);
      m |= static_cast<Mask>(1u << i);
    }
    const Rational c = evaluate(ambient, p, vecs);
    if (sgn(c) != 0) r.add_term(m, Poly7::constant(c));
  };
  // k is at most 6 here; simple nested recursion.
  std::vector<int> tuple;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(tuple.size()) == k) {
      emit(tuple);
      return;
    }
    for (int i = start; i < 6; ++i) {
      tuple.push_back(i);
      self(self, i + 1);
      tuple.pop_back();
    }
  };
  rec(rec, 0);
  return r;
}

const PolyForm& omega_north() {
  static const PolyForm form = [] {
    Vec7Q north{};
    north[0] = 1;
    return restrict_to_subspace(omega_tilde(), Subspace6::tangent_at_north(),
                                north);
  }();
  return form;
}

Mat6Q j_north() {
  static const Mat6Q j = [] {
    Vec7Q north{};
    north[0] = 1;
    const Subspace6 s = Subspace6::tangent_at_north();
    Mat6Q m{};
    for (int col = 0; col < 6; ++col) {
      const Vec7Q img = cross(north, s.basis[col]);
      for (int row = 0; row < 6; ++row) m[row][col] = img[row + 1];
    }
    return m;
  }();
  return j;
}

PolyField field_from_vec6(const Vec6Q& v) {
  return PolyField::constant(embed(v));
}

PolyForm delta_quadratic(const PolyForm& alpha, const Vec6Q& v) {
  if (alpha.degree() != 3)
    throw std::invalid_argument("delta expects a 3-form");
  const PolyForm iv = contract(field_from_vec6(v), alpha);
  return wedge(iv, iv);
}

Vec6Q dual_vector(const PolyForm& alpha, const PolyForm& nu, const Vec6Q& v) {
  if (nu.degree() != 6) throw std::invalid_argument("nu must be a 6-form");
  const Poly7& cpoly = nu.coeff(kFullMask6);
  if (cpoly.is_zero() || !is_constant_form6(nu))
    throw std::invalid_argument("degenerate volume form");
  const Rational c = cpoly.terms().begin()->second;

  const PolyForm beta = wedge(contract(field_from_vec6(v), alpha), alpha);
  // i_{e_i} nu = c * (-1)^{i-1} dx^{..without i..}.
  Vec6Q w{};
  for (int i = 1; i <= 6; ++i) {
    const Mask m = static_cast<Mask>(kFullMask6 & ~(1u << (i - 1)));
    const Poly7& b = beta.coeff(m);
    if (b.is_zero()) continue;
    Rational val = b.terms().begin()->second;
    if (removal_sign(kFullMask6, i) < 0) val = -val;
    w[i - 1] = val / c;
  }
  return w;
}

std::map<Mask, Poly7> vw_wedge_coefficients(const PolyForm& alpha) {
  // Column r of W is the dual vector of the r-th basis vector.
  Mat6Q w_cols{};
  const PolyForm nu = volume6();
  for (int r = 0; r < 6; ++r) {
    Vec6Q e{};
    e[r] = 1;
    const Vec6Q w = dual_vector(alpha, nu, e);
    for (int i = 0; i < 6; ++i) w_cols[i][r] = w[i];
  }
  // Symbolic v: variable i holds v^i. (Wv)_i and v_i are linear Poly7s.
  std::array<Poly7, 6> v_sym, wv_sym;
  for (int i = 0; i < 6; ++i) {
    v_sym[i] = Poly7::var(i + 1);
    for (int r = 0; r < 6; ++r)
      if (sgn(w_cols[i][r]) != 0)
        wv_sym[i] += w_cols[i][r] * Poly7::var(r + 1);
  }
  std::map<Mask, Poly7> coeffs;
  for (int r = 0; r < 6; ++r)
    for (int s = r + 1; s < 6; ++s) {
      Poly7 c = v_sym[r] * wv_sym[s] - v_sym[s] * wv_sym[r];
      if (!c.is_zero())
        coeffs.emplace(mask_of({r + 1, s + 1}), std::move(c));
    }
  return coeffs;
}

namespace {

// A diagonal quadratic c = sum d_i v_i^2 with no cross monomials; reports
// the diagonal or returns false.
bool diagonal_quadratic(const Poly7& p, std::array<Rational, 6>* diag) {
  diag->fill(Rational(0));
  for (const auto& [e, c] : p.terms()) {
    int var = -1;
    for (int i = 0; i < 7; ++i) {
      if (e[i] == 0) continue;
      if (e[i] != 2 || var != -1 || i == 6) return false;
      var = i;
    }
    if (var == -1) return false;  // constant term
    (*diag)[var] = c;
  }
  return true;
}

}  // namespace

DeltaVerdict delta_is_trivial(const PolyForm& alpha) {
  if (alpha.degree() != 3)
    throw std::invalid_argument("delta expects a 3-form");

  // Falsification: a nonzero v with q(v) = 0 settles non-triviality.
  std::vector<Vec6Q> candidates;
  for (int i = 0; i < 6; ++i) {
    Vec6Q e{};
    e[i] = 1;
    candidates.push_back(e);
  }
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int s : {1, -1}) {
        Vec6Q e{};
        e[i] = 1;
        e[j] = s;
        candidates.push_back(e);
      }
  std::mt19937_64 rng(0x5eed);
  for (int n = 0; n < 64; ++n) {
    Vec6Q v;
    for (auto& x : v) x = random_rational(rng, 4, 4);
    if (!is_zero(embed(v))) candidates.push_back(v);
  }
  for (const Vec6Q& v : candidates)
    if (delta_quadratic(alpha, v).is_zero()) return DeltaVerdict::nontrivial;

  // Certificate: sum the sign-normalized diagonal components of v ^ w_v.
  // If the sum is a strictly positive diagonal, q(v) = 0 forces v = 0.
  std::array<Rational, 6> total{};
  for (const auto& [m, c] : vw_wedge_coefficients(alpha)) {
    std::array<Rational, 6> diag;
    if (!diagonal_quadratic(c, &diag)) continue;
    int pos = 0, neg = 0;
    for (const auto& d : diag) {
      if (sgn(d) > 0) ++pos;
      if (sgn(d) < 0) ++neg;
    }
    if (pos && neg) continue;  // indefinite component, no use here
    for (int i = 0; i < 6; ++i) total[i] += (neg ? -diag[i] : diag[i]);
  }
  bool definite = true;
  for (const auto& d : total)
    if (sgn(d) <= 0) definite = false;
  if (definite) return DeltaVerdict::trivial;

  return DeltaVerdict::undecided;
}

bool certify_complex_type(const PolyForm& alpha, const Mat6Q& j) {
  // J^2 = -id is a precondition, not part of the certificate.
  const Mat6Q jj = matmul6(j, j);
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c)
      if (jj[r][c] != (r == c ? rat(-1) : Rational(0)))
        throw std::invalid_argument("J is not an almost complex structure");

  std::array<Vec7Q, 6> basis{}, jbasis{};
  for (int i = 0; i < 6; ++i) {
    basis[i][i] = 1;
    Vec6Q e{};
    e[i] = 1;
    jbasis[i] = embed(matvec6(j, e));
  }
  const Vec7Q origin{};
  auto val = [&](const Vec7Q& a, const Vec7Q& b, const Vec7Q& c) {
    const std::array<Vec7Q, 3> vecs{a, b, c};
    return evaluate(alpha, origin, vecs);
  };
  for (int u = 0; u < 6; ++u)
    for (int v = 0; v < 6; ++v)
      for (int w = 0; w < 6; ++w) {
        const Rational a = val(jbasis[u], basis[v], basis[w]);
        if (a != val(basis[u], jbasis[v], basis[w])) return false;
        if (a != val(basis[u], basis[v], jbasis[w])) return false;
      }
  return true;
}

std::vector<Vec6Q> contraction_kernel(const PolyForm& alpha, const Vec6Q& v) {
  if (is_zero(embed(v)))
    throw std::invalid_argument("contraction kernel of the zero vector");
  const PolyForm beta = contract(field_from_vec6(v), alpha);
  // Row a, column b: coefficient of dx^a in i_{e_b} beta.
  QMatrix m(6, 6);
  for (int b = 0; b < 6; ++b) {
    Vec6Q e{};
    e[b] = 1;
    const PolyForm one = contract(field_from_vec6(e), beta);
    for (int a = 1; a <= 6; ++a) {
      const Poly7& c = one.coeff(static_cast<Mask>(1u << (a - 1)));
      if (!c.is_zero()) m.at(a - 1, b) = c.terms().begin()->second;
    }
  }
  std::vector<Vec6Q> kernel;
  for (const QVec& n : nullspace(m)) {
    Vec6Q k;
    for (int i = 0; i < 6; ++i) k[i] = n[i];
    kernel.push_back(k);
  }
  return kernel;
}

Vec6Q matvec6(const Mat6Q& m, const Vec6Q& v) {
  Vec6Q r{};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) r[i] += m[i][j] * v[j];
  return r;
}

Mat6Q matmul6(const Mat6Q& a, const Mat6Q& b) {
  Mat6Q c{};
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 6; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (int j = 0; j < 6; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

}  // namespace s6p
