#pragma once

#include <optional>
#include <utility>

#include "einflag/errors.hpp"
#include "einflag/interval.hpp"
#include "einflag/realroots.hpp"
#include "einflag/solver/types.hpp"
#include "einflag/unipoly.hpp"

namespace einflag {

/// True when the (single) root isolated by `root` is also a root of h.
inline bool root_is_zero_of(const IsolatedRoot& root, const UniPoly& h) {
  if (h.is_zero()) return true;
  const UniPoly g = poly_gcd(root.poly, h);
  if (g.degree() < 1) return false;
  if (g(root.lo) == 0) return true;
  return !root.is_exact() && count_roots(g, root.lo, root.hi) > 0;
}

/// A coordinate given as num/den evaluated at an isolated root.
struct RootFunction {
  UniPoly num;
  UniPoly den;
};

/// Outcome of certifying a set of coordinates at one root.
struct CoordinateEnclosures {
  IsolatedRoot root;
  std::vector<RatInterval> values;
  /// +1 / -1 certified sign, 0 for an exact zero.
  std::vector<int> signs;
};

/**
 * Refine `root` until the root itself and every num/den coordinate have a
 * decided sign and (for the admissible, all-positive case) width at most
 * the target. An exact zero of a coordinate is detected by a gcd test rather
 * than by refinement. PositivityUndecided once the root interval falls below
 * the cap width without a decision.
 */
inline CoordinateEnclosures enclose_at_root(IsolatedRoot root, const std::vector<RootFunction>& coords,
                                            const SolverOptions& opt) {
  const Rational target = opt.target_width();
  const Rational cap = opt.cap_width();
  std::vector<bool> is_zero;
  for (const auto& c : coords) {
    if (root_is_zero_of(root, c.den)) throw DegenerateDenominator("coordinate denominator vanishes at the root");
    is_zero.push_back(root_is_zero_of(root, c.num));
  }
  Rational w = target;
  if (root.width() > w) root = refine(root, w);
  while (true) {
    CoordinateEnclosures out{root, {}, {}};
    bool decided = root.interval().excludes_zero();
    bool narrow = root.width() <= target;
    for (std::size_t k = 0; k < coords.size() && decided; ++k) {
      if (is_zero[k]) {
        out.values.emplace_back(Rational(0));
        out.signs.push_back(0);
        continue;
      }
      try {
        const RatInterval v = interval_eval_rational(coords[k].num, coords[k].den, root.interval());
        const int s = v.certified_sign();
        if (s == 0) {
          decided = false;
          break;
        }
        out.values.push_back(v);
        out.signs.push_back(s);
        if (v.width() > target) narrow = false;
      } catch (const DenominatorStraddlesZero&) {
        decided = false;
      }
    }
    if (decided) {
      bool admissible = root.interval().certified_sign() > 0;
      for (int s : out.signs) admissible = admissible && s > 0;
      if (narrow || !admissible) return out;
    }
    if (root.is_exact() || root.width() < cap) {
      throw PositivityUndecided("sign of a coordinate undecided at width " + to_string(root.width()));
    }
    w = root.width() * power_of_two(-16);
    root = refine(root, w);
  }
}

}  // namespace einflag
