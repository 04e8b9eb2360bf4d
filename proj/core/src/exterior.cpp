#include "s6p/exterior.hpp"

#include <bit>
#include <stdexcept>

namespace s6p {

int mask_degree(Mask m) { return std::popcount(m); }

std::vector<int> mask_indices(Mask m) {
  std::vector<int> idx;
  for (int i = 1; i <= 7; ++i)
    if (m & (1u << (i - 1))) idx.push_back(i);
  return idx;
}

Mask mask_of(std::initializer_list<int> indices) {
  Mask m = 0;
  for (int i : indices) {
    if (i < 1 || i > 7) throw std::out_of_range("form index not in 1..7");
    const Mask bit = static_cast<Mask>(1u << (i - 1));
    if (m & bit) throw std::invalid_argument("repeated form index");
    m |= bit;
  }
  return m;
}

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // Count inversions: pairs (i in a, j in b) with j < i.
  int inv = 0;
  for (int i = 0; i < 7; ++i)
    if (a & (1u << i)) inv += std::popcount(static_cast<Mask>(b & ((1u << i) - 1u)));
  return (inv % 2 == 0) ? 1 : -1;
}

int removal_sign(Mask m, int i) {
  const Mask bit = static_cast<Mask>(1u << (i - 1));
  if (!(m & bit)) throw std::invalid_argument("index not present in tuple");
  const int below = std::popcount(static_cast<Mask>(m & (bit - 1u)));
  return (below % 2 == 0) ? 1 : -1;
}

PolyForm::PolyForm(int degree) : degree_(degree) {
  if (degree < 0 || degree > 7) throw std::invalid_argument("form degree not in 0..7");
}

PolyForm PolyForm::dx(int i) {
  PolyForm f(1);
  f.add_term(mask_of({i}), Poly7::constant(1));
  return f;
}

PolyForm PolyForm::monomial(std::initializer_list<int> indices,
                            const Poly7& coeff) {
  const Mask m = mask_of(indices);
  if (static_cast<std::size_t>(mask_degree(m)) != indices.size())
    throw std::invalid_argument("indices must be distinct");
  // Require ascending order so the caller states the sign explicitly.
  int prev = 0;
  for (int i : indices) {
    if (i <= prev) throw std::invalid_argument("indices must be increasing");
    prev = i;
  }
  PolyForm f(mask_degree(m));
  f.add_term(m, coeff);
  return f;
}

PolyForm PolyForm::from_function(const Poly7& f) {
  PolyForm r(0);
  r.add_term(0, f);
  return r;
}

const Poly7& PolyForm::coeff(Mask m) const {
  static const Poly7 zero;
  auto it = c_.find(m);
  return it == c_.end() ? zero : it->second;
}

void PolyForm::add_term(Mask m, const Poly7& coeff) {
  if (coeff.is_zero()) return;
  if (mask_degree(m) != degree_)
    throw std::invalid_argument("tuple length does not match form degree");
  auto it = c_.find(m);
  if (it == c_.end()) {
    c_.emplace(m, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) c_.erase(it);
  }
}

PolyForm PolyForm::operator-() const {
  PolyForm r(degree_);
  for (const auto& [m, p] : c_) r.c_.emplace(m, -p);
  return r;
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  if (degree_ != o.degree_)
    throw std::invalid_argument("cannot add forms of different degree");
  for (const auto& [m, p] : o.c_) add_term(m, p);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
  if (degree_ != o.degree_)
    throw std::invalid_argument("cannot subtract forms of different degree");
  for (const auto& [m, p] : o.c_) add_term(m, -p);
  return *this;
}

PolyForm operator*(const Rational& c, const PolyForm& a) {
  PolyForm r(a.degree_);
  for (const auto& [m, p] : a.c_) r.add_term(m, c * p);
  return r;
}

PolyForm operator*(const Poly7& f, const PolyForm& a) {
  PolyForm r(a.degree_);
  for (const auto& [m, p] : a.c_) r.add_term(m, f * p);
  return r;
}

PolyField PolyField::constant(const Vec7Q& v) {
  PolyField f;
  for (int i = 0; i < 7; ++i)
    if (sgn(v[i]) != 0) f.comp_[i] = Poly7::constant(v[i]);
  return f;
}

PolyField PolyField::coordinate(int i) {
  if (i < 1 || i > 7) throw std::out_of_range("field index not in 1..7");
  PolyField f;
  f.comp_[i - 1] = Poly7::constant(1);
  return f;
}

PolyField PolyField::euler() {
  PolyField f;
  for (int i = 1; i <= 7; ++i) f.comp_[i - 1] = Poly7::var(i);
  return f;
}

PolyField PolyField::linear(const Mat7Q& a) {
  PolyField f;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      if (sgn(a[i][j]) != 0) f.comp_[i] += a[i][j] * Poly7::var(j + 1);
  return f;
}

PolyField PolyField::identity() { return euler(); }

const Poly7& PolyField::component(int i) const {
  if (i < 1 || i > 7) throw std::out_of_range("field index not in 1..7");
  return comp_[i - 1];
}

Poly7& PolyField::component(int i) {
  if (i < 1 || i > 7) throw std::out_of_range("field index not in 1..7");
  return comp_[i - 1];
}

bool PolyField::is_zero() const {
  for (const auto& p : comp_)
    if (!p.is_zero()) return false;
  return true;
}

Vec7Q PolyField::eval(const Vec7Q& x) const {
  Vec7Q v;
  for (int i = 0; i < 7; ++i) v[i] = comp_[i].eval(x);
  return v;
}

PolyField PolyField::operator-() const {
  PolyField r;
  for (int i = 0; i < 7; ++i) r.comp_[i] = -comp_[i];
  return r;
}

PolyField& PolyField::operator+=(const PolyField& o) {
  for (int i = 0; i < 7; ++i) comp_[i] += o.comp_[i];
  return *this;
}

PolyField& PolyField::operator-=(const PolyField& o) {
  for (int i = 0; i < 7; ++i) comp_[i] -= o.comp_[i];
  return *this;
}

PolyField operator*(const Rational& c, const PolyField& v) {
  PolyField r;
  for (int i = 0; i < 7; ++i) r.comp_[i] = c * v.comp_[i];
  return r;
}

PolyField operator*(const Poly7& f, const PolyField& v) {
  PolyField r;
  for (int i = 0; i < 7; ++i) r.comp_[i] = f * v.comp_[i];
  return r;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  if (a.degree() + b.degree() > 7)
    throw std::invalid_argument("wedge: degree exceeds 7");
  PolyForm r(a.degree() + b.degree());
  for (const auto& [ma, pa] : a.terms())
    for (const auto& [mb, pb] : b.terms()) {
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      Poly7 p = pa * pb;
      if (s < 0) p = -p;
      r.add_term(static_cast<Mask>(ma | mb), p);
    }
  return r;
}

PolyForm exterior_derivative(const PolyForm& a) {
  if (a.degree() >= 7)
    throw std::invalid_argument("exterior derivative of a top form");
  PolyForm r(a.degree() + 1);
  for (const auto& [m, p] : a.terms())
    for (int j = 1; j <= 7; ++j) {
      const Mask bit = static_cast<Mask>(1u << (j - 1));
      if (m & bit) continue;
      Poly7 dp = p.derivative(j);
      if (dp.is_zero()) continue;
      const int s = wedge_sign(bit, m);
      if (s < 0) dp = -dp;
      r.add_term(static_cast<Mask>(m | bit), dp);
    }
  return r;
}

PolyForm contract(const PolyField& v, const PolyForm& a) {
  if (a.degree() == 0)
    throw std::invalid_argument("contraction of a degree-0 form");
  PolyForm r(a.degree() - 1);
  for (const auto& [m, p] : a.terms())
    for (int i : mask_indices(m)) {
      const Poly7& vi = v.component(i);
      if (vi.is_zero()) continue;
      Poly7 t = vi * p;
      if (removal_sign(m, i) < 0) t = -t;
      r.add_term(static_cast<Mask>(m & ~(1u << (i - 1))), t);
    }
  return r;
}

PolyForm contract(std::span<const PolyField> fields, const PolyForm& a) {
  if (static_cast<int>(fields.size()) > a.degree())
    throw std::invalid_argument("contraction exceeds form degree");
  PolyForm r = a;
  for (const PolyField& v : fields) r = contract(v, r);
  return r;
}

PolyForm lie_derivative(const PolyField& v, const PolyForm& a) {
  if (a.degree() == 0) return contract(v, exterior_derivative(a));
  if (a.degree() == 7) return exterior_derivative(contract(v, a));
  return contract(v, exterior_derivative(a)) +
         exterior_derivative(contract(v, a));
}

PolyField lie_bracket(const PolyField& v, const PolyField& w) {
  PolyField r;
  for (int i = 1; i <= 7; ++i) {
    Poly7 acc;
    for (int j = 1; j <= 7; ++j) {
      acc += v.component(j) * w.component(i).derivative(j);
      acc -= w.component(j) * v.component(i).derivative(j);
    }
    r.component(i) = acc;
  }
  return r;
}

Rational evaluate(const PolyForm& a, const Vec7Q& p,
                  std::span<const Vec7Q> vectors) {
  if (static_cast<int>(vectors.size()) != a.degree())
    throw std::invalid_argument("evaluate: arity mismatch");
  PolyForm r = a;
  for (const Vec7Q& v : vectors) r = contract(PolyField::constant(v), r);
  return r.coeff(0).eval(p);
}

Rational poly_dot(const PolyField& v, const PolyField& w, const Vec7Q& x) {
  Rational s = 0;
  for (int i = 1; i <= 7; ++i)
    s += v.component(i).eval(x) * w.component(i).eval(x);
  return s;
}

}  // namespace s6p
