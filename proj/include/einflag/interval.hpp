#pragma once

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>

#include "einflag/errors.hpp"
#include "einflag/rational.hpp"

namespace einflag {

/// Closed interval [lo, hi] with exact rational endpoints. Arithmetic is
/// exact on the endpoints, so every result encloses the true range.
class RatInterval {
 public:
  RatInterval() = default;
  explicit RatInterval(const Rational& point) : lo_(point), hi_(point) {}
  RatInterval(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi) {
    if (hi_ < lo_) throw std::invalid_argument("RatInterval: lo > hi");
  }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const RatInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool excludes_zero() const { return sgn(lo_) > 0 || sgn(hi_) < 0; }

  /// +1 or -1 when the sign is certified, 0 when the interval meets zero.
  int certified_sign() const {
    if (sgn(lo_) > 0) return 1;
    if (sgn(hi_) < 0) return -1;
    return 0;
  }

  friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return {a.lo_ + b.lo_, a.hi_ + b.hi_};
  }
  friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return {a.lo_ - b.hi_, a.hi_ - b.lo_};
  }
  RatInterval operator-() const { return {-hi_, -lo_}; }

  friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    if (a.is_point()) return b * a.lo_;
    if (b.is_point()) return a * b.lo_;
    const Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
  }
  friend RatInterval operator*(const RatInterval& a, const Rational& s) {
    if (sgn(s) >= 0) return {a.lo_ * s, a.hi_ * s};
    return {a.hi_ * s, a.lo_ * s};
  }
  friend RatInterval operator*(const Rational& s, const RatInterval& a) { return a * s; }

  friend bool operator==(const RatInterval& a, const RatInterval& b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }

 private:
  Rational lo_{0};
  Rational hi_{0};
};

/// 1/x; throws DenominatorStraddlesZero if 0 lies in x.
inline RatInterval reciprocal(const RatInterval& x) {
  if (!x.excludes_zero()) {
    throw DenominatorStraddlesZero("interval [" + to_string(x.lo()) + ", " + to_string(x.hi()) + "] contains 0");
  }
  return {1 / x.hi(), 1 / x.lo()};
}

inline RatInterval operator/(const RatInterval& a, const RatInterval& b) { return a * reciprocal(b); }

inline bool overlaps(const RatInterval& a, const RatInterval& b) { return a.lo() <= b.hi() && b.lo() <= a.hi(); }

/// Intersection; throws if the intervals are disjoint.
inline RatInterval intersect(const RatInterval& a, const RatInterval& b) {
  if (!overlaps(a, b)) throw std::domain_error("intersect: disjoint intervals");
  return {std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi())};
}

inline RatInterval hull(const RatInterval& a, const RatInterval& b) {
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

/// Smallest enclosure of x with endpoints in 2^-bits Z.
inline RatInterval round_outward(const RatInterval& x, long bits) {
  const Rational scale = power_of_two(bits);
  return {Rational(floor_of(x.lo() * scale)) / scale, Rational(ceil_of(x.hi() * scale)) / scale};
}

inline std::string to_string(const RatInterval& x) {
  return "[" + to_string(x.lo()) + ", " + to_string(x.hi()) + "]";
}

}  // namespace einflag
