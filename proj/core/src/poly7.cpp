#include "s6p/poly7.hpp"

#include <stdexcept>

namespace s6p {

Poly7 Poly7::constant(const Rational& c) {
  Poly7 p;
  p.add_term(Exponents{}, c);
  return p;
}

Poly7 Poly7::var(int i) {
  if (i < 1 || i > 7) throw std::out_of_range("variable index not in 1..7");
  Exponents e{};
  e[i - 1] = 1;
  Poly7 p;
  p.add_term(e, 1);
  return p;
}

int Poly7::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto k : e) s += k;
    if (s > d) d = s;
  }
  return d;
}

void Poly7::add_term(const Exponents& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly7 Poly7::operator-() const {
  Poly7 r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly7& Poly7::operator+=(const Poly7& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly7& Poly7::operator-=(const Poly7& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly7 operator*(const Poly7& a, const Poly7& b) {
  Poly7 r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (int i = 0; i < 7; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly7 operator*(const Rational& c, const Poly7& p) {
  Poly7 r;
  if (sgn(c) == 0) return r;
  for (const auto& [e, k] : p.terms_) r.terms_.emplace(e, c * k);
  return r;
}

Poly7 Poly7::derivative(int i) const {
  if (i < 1 || i > 7) throw std::out_of_range("variable index not in 1..7");
  const int v = i - 1;
  Poly7 r;
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponents d = e;
    d[v] -= 1;
    r.add_term(d, Rational(static_cast<long>(e[v])) * c);
  }
  return r;
}

Rational Poly7::eval(const Vec7Q& x) const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < 7; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

Poly7 reduce_mod_sphere(const Poly7& p) {
  // g = x.x - 1; repeatedly rewrite x7^2 -> 1 - sum_{i<7} xi^2.
  Poly7 r = p;
  for (;;) {
    const Exponents* hit = nullptr;
    Rational coeff;
    for (const auto& [e, c] : r.terms())
      if (e[6] >= 2) {
        hit = &e;
        coeff = c;
        break;
      }
    if (!hit) return r;
    Exponents base = *hit;
    base[6] -= 2;
    Poly7 m;
    m.add_term(base, coeff);
    // r -= m * g  (cancels the x7^2 term, introduces lower x7-degree ones)
    Poly7 g;
    for (int i = 1; i <= 7; ++i) g += Poly7::var(i) * Poly7::var(i);
    g -= Poly7::constant(1);
    r -= m * g;
  }
}

}  // namespace s6p
