#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace einflag {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

inline int sign(const Rational& q) { return sgn(q); }

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

inline Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// 2^e for signed e.
inline Rational power_of_two(long e) {
  Rational r(1);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

/// "a" or "a/b" in lowest terms.
inline std::string to_string(const Rational& q) { return q.get_str(10); }

/// Decimal expansion truncated toward zero after `digits` fractional digits.
inline std::string to_decimal(const Rational& q, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits < 0 ? 0 : digits));
  Integer scaled = q.get_num() * scale;
  Integer t;
  mpz_tdiv_q(t.get_mpz_t(), scaled.get_mpz_t(), q.get_den_mpz_t());
  const bool negative = sgn(q) < 0;
  if (negative) t = -t;
  std::string body = t.get_str(10);
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + body : body;
}

/// Fraction with the smallest denominator in the closed interval [lo, hi].
inline Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
  if (sgn(hi) < 0) return -simplest_rational_between(-hi, -lo);
  const Integer c = ceil_of(lo);
  if (c <= hi) return Rational(c);
  const Integer f = floor_of(lo);
  const Rational inner = simplest_rational_between(1 / (hi - f), 1 / (lo - f));
  Rational r = Rational(f) + 1 / inner;
  r.canonicalize();
  return r;
}

}  // namespace einflag
