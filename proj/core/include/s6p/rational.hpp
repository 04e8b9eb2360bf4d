// Exact rational scalars (GMP-backed) used throughout the exact pipeline.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace s6p {

// Always stored reduced with positive denominator; mpq_class keeps the
// canonical form under arithmetic as long as inputs are canonical.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q".
inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("cannot parse rational: " + s);
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational: " + s);
  r.canonicalize();
  return r;
}

// Binary doubles are exact rationals; non-finite input is rejected.
inline Rational rational_from_double(double x) {
  if (!(x == x) || x - x != 0.0)
    throw std::invalid_argument("non-finite value is not a rational");
  return Rational(x);
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

// Exact square root when the value is the square of a rational.
inline bool rational_sqrt(const Rational& r, Rational* root) {
  if (sgn(r) < 0) return false;
  const mpz_class num = r.get_num();
  const mpz_class den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  if (root) *root = Rational(sn) / Rational(sd);
  return true;
}

// Small random rationals for property sweeps; exact, deterministic per seed.
inline Rational random_rational(std::mt19937_64& rng, long max_abs_num = 9,
                                long max_den = 9) {
  std::uniform_int_distribution<long> num(-max_abs_num, max_abs_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return rat(num(rng), den(rng));
}

}  // namespace s6p
