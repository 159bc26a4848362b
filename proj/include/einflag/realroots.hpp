#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "einflag/errors.hpp"
#include "einflag/interval.hpp"
#include "einflag/rational.hpp"
#include "einflag/unipoly.hpp"

namespace einflag {

/// A finite bound or, when empty, the appropriate infinity.
using Bound = std::optional<Rational>;

/// Sturm sequence of the square-free part of a polynomial.
class SturmChain {
 public:
  explicit SturmChain(const UniPoly& f) {
    if (f.is_zero()) throw std::domain_error("SturmChain of zero polynomial");
    chain_.push_back(square_free_part(f));
    if (chain_.back().degree() < 1) return;
    chain_.push_back(derivative(chain_.back()));
    while (chain_.back().degree() > 0) {
      UniPoly r = remainder(chain_[chain_.size() - 2], chain_.back());
      if (r.is_zero()) break;
      chain_.push_back(-r);
    }
  }

  const UniPoly& square_free() const { return chain_.front(); }
  const std::vector<UniPoly>& polys() const { return chain_; }

  /// Sign variations at x (zeros skipped).
  int variations(const Rational& x) const {
    int v = 0, last = 0;
    for (const auto& p : chain_) {
      const int s = sgn(p(x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  /// Sign variations at +infinity (positive = true) or -infinity.
  int variations_at_infinity(bool positive) const {
    int v = 0, last = 0;
    for (const auto& p : chain_) {
      int s = sgn(p.leading());
      if (!positive && p.degree() % 2 == 1) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  int variations(const Bound& b, bool upper) const {
    return b ? variations(*b) : variations_at_infinity(upper);
  }

  /// Number of distinct real roots in (lo, hi].
  int count(const Bound& lo, const Bound& hi) const {
    if (lo && hi && *hi <= *lo) return 0;
    return variations(lo, false) - variations(hi, true);
  }

 private:
  std::vector<UniPoly> chain_;
};

/// Number of distinct real roots of f in (lo, hi].
inline int count_roots(const UniPoly& f, const Bound& lo = std::nullopt, const Bound& hi = std::nullopt) {
  if (f.is_zero()) throw std::domain_error("count_roots of zero polynomial");
  return SturmChain(f).count(lo, hi);
}

/// A square-free polynomial and a closed interval holding exactly one of its
/// roots. lo == hi marks an exact rational root.
struct IsolatedRoot {
  UniPoly poly;
  Rational lo;
  Rational hi;
  int multiplicity = 1;

  bool is_exact() const { return lo == hi; }
  RatInterval interval() const { return {lo, hi}; }
  Rational width() const { return hi - lo; }
};

/// Smallest power of two bounding the absolute value of every root.
inline Rational cauchy_bound(const UniPoly& f) {
  Rational m(0);
  for (int k = 0; k < f.degree(); ++k) {
    Rational r = abs(f.coeff(k) / f.leading());
    if (r > m) m = r;
  }
  Rational b(1);
  while (b <= m + 1) b *= 2;
  return b;
}

namespace detail {

inline int multiplicity_of(const std::vector<UniPoly>& factors, const Rational& lo, const Rational& hi) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& g = factors[i];
    if (g(lo) == 0 || (lo != hi && count_roots(g, lo, hi) > 0)) return static_cast<int>(i) + 1;
  }
  return 1;
}

}  // namespace detail

/// Disjoint isolating intervals, sorted, for every distinct root in (lo, hi].
inline std::vector<IsolatedRoot> isolate_roots(const UniPoly& f, const Bound& lo = std::nullopt,
                                               const Bound& hi = std::nullopt) {
  if (f.is_zero()) throw std::domain_error("isolate_roots of zero polynomial");
  std::vector<IsolatedRoot> out;
  if (f.degree() < 1) return out;
  const SturmChain chain(f);
  const UniPoly& sf = chain.square_free();
  const Rational bound = cauchy_bound(sf);
  Rational a = lo ? *lo : -bound;
  Rational b = hi ? *hi : bound;
  if (lo && *lo < -bound) a = -bound;
  if (hi && *hi > bound) b = bound;
  if (b <= a) return out;
  const auto factors = square_free_decomposition(f);

  struct Piece {
    Rational a, b;
    int count;
  };
  std::vector<Piece> stack{{a, b, chain.count(a, b)}};
  while (!stack.empty()) {
    Piece pc = stack.back();
    stack.pop_back();
    if (pc.count == 0) continue;
    if (pc.count == 1) {
      Rational l = pc.a, h = pc.b;
      while (true) {
        if (sf(h) == 0) {
          l = h;
          break;
        }
        if (sf(l) != 0) break;
        const Rational m = (l + h) / 2;
        if (chain.count(l, m) == 1) {
          h = m;
        } else {
          l = m;
        }
      }
      out.push_back({sf, l, h, detail::multiplicity_of(factors, l, h)});
      continue;
    }
    const Rational m = (pc.a + pc.b) / 2;
    const int left = chain.count(pc.a, m);
    stack.push_back({m, pc.b, pc.count - left});
    stack.push_back({pc.a, m, left});
  }
  std::sort(out.begin(), out.end(), [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.lo < y.lo; });
  return out;
}

/// Shrink the isolating interval to width <= target by bisection.
inline IsolatedRoot refine(IsolatedRoot root, const Rational& target_width) {
  if (root.is_exact()) return root;
  const int s_lo = sgn(root.poly(root.lo));
  while (root.hi - root.lo > target_width) {
    const Rational m = (root.lo + root.hi) / 2;
    const int s = sgn(root.poly(m));
    if (s == 0) {
      root.lo = root.hi = m;
      return root;
    }
    if (s == s_lo) {
      root.lo = m;
    } else {
      root.hi = m;
    }
  }
  return root;
}

/// If the root is rational, return it (and collapse the interval).
inline std::optional<Rational> exactify(IsolatedRoot& root) {
  if (root.is_exact()) return root.lo;
  const UniPoly prim = primitive_part(root.poly);
  const Integer den_bound = abs(prim.leading().get_num());
  const Rational target = Rational(1) / Rational(den_bound * den_bound * 2);
  root = refine(root, target);
  if (root.is_exact()) return root.lo;
  const Rational c = simplest_rational_between(root.lo, root.hi);
  if (c.get_den() <= den_bound && root.poly(c) == 0) {
    root.lo = root.hi = c;
    return c;
  }
  return std::nullopt;
}

/// Horner evaluation over an interval; encloses {f(t) : t in x}.
inline RatInterval interval_eval(const UniPoly& f, const RatInterval& x) {
  if (x.is_point()) return RatInterval(f(x.lo()));
  RatInterval acc(Rational(0));
  for (int k = f.degree(); k >= 0; --k) acc = acc * x + RatInterval(f.coeff(k));
  return acc;
}

/// Encloses numer(t)/denom(t) for t in x; DenominatorStraddlesZero when the
/// enclosure of the denominator meets 0.
inline RatInterval interval_eval_rational(const UniPoly& numer, const UniPoly& denom, const RatInterval& x) {
  const RatInterval d = interval_eval(denom, x);
  if (!d.excludes_zero()) {
    throw DenominatorStraddlesZero("denominator enclosure " + to_string(d) + " contains 0");
  }
  return interval_eval(numer, x) / d;
}

}  // namespace einflag
