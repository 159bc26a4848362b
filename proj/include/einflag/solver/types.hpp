#pragma once

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "einflag/flagmodel.hpp"
#include "einflag/interval.hpp"
#include "einflag/rational.hpp"

namespace einflag {

enum class SolutionKind { Kahler, NonKahler };

enum class Origin { Case1, Case2aSub1, Case2aSub2, Case2aSub3, Case2aSub4, Case2b };

inline std::string to_string(SolutionKind k) { return k == SolutionKind::Kahler ? "kahler" : "non_kahler"; }

inline std::string to_string(Origin o) {
  switch (o) {
    case Origin::Case1: return "case1";
    case Origin::Case2aSub1: return "case2a-sub1";
    case Origin::Case2aSub2: return "case2a-sub2";
    case Origin::Case2aSub3: return "case2a-sub3";
    case Origin::Case2aSub4: return "case2a-sub4";
    case Origin::Case2b: return "case2b";
  }
  return "?";
}

/// What was checked for a solution.
struct Certificate {
  bool positivity = false;     // every coordinate certified > 0
  std::string residual;        // "exact" or "ideal-membership"
  bool distinct = false;       // separated from every other reported tuple
  std::vector<std::string> notes;
};

struct EinsteinSolution {
  /// Enclosures with x1 = 1; point intervals for rational solutions.
  Metric4<RatInterval> metric;
  /// Present when every entry is rational.
  std::optional<Metric4<Rational>> exact;
  SolutionKind kind = SolutionKind::NonKahler;
  RatInterval einstein_constant;
  std::optional<Rational> exact_einstein_constant;
  Origin origin = Origin::Case2b;
  Certificate certificate;
  /// For algebraic solutions: x3 is the root of this polynomial in metric.x3.
  std::optional<UniPoly> defining_polynomial;
};

struct SolverOptions {
  /// Certified enclosures are refined to width <= 2^-precision_bits.
  long precision_bits = 80;
  /// Give up (PositivityUndecided) below root width 2^-cap_bits.
  long cap_bits = 4096;

  Rational target_width() const { return power_of_two(-precision_bits); }
  Rational cap_width() const { return power_of_two(-cap_bits); }

  /// Defaults, with EINFLAG_PRECISION overriding precision_bits.
  static SolverOptions from_environment() {
    SolverOptions o;
    if (const char* env = std::getenv("EINFLAG_PRECISION")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) o.precision_bits = v;
    }
    return o;
  }
};

inline Metric4<RatInterval> to_interval(const Metric4<Rational>& g) {
  return {RatInterval(g.x1), RatInterval(g.x2), RatInterval(g.x3), RatInterval(g.x4)};
}

/// Same tuple: exact equality when both are rational, otherwise every
/// coordinate enclosure overlaps.
inline bool same_metric(const EinsteinSolution& a, const EinsteinSolution& b) {
  if (a.exact && b.exact) return *a.exact == *b.exact;
  const auto x = a.metric.as_array(), y = b.metric.as_array();
  for (int k = 0; k < 4; ++k) {
    if (!overlaps(x[k], y[k])) return false;
  }
  return true;
}

/// Sort key: midpoints of (x3, x4, x2).
inline bool solution_less(const EinsteinSolution& a, const EinsteinSolution& b) {
  const Rational a3 = a.metric.x3.midpoint(), b3 = b.metric.x3.midpoint();
  if (a3 != b3) return a3 < b3;
  const Rational a4 = a.metric.x4.midpoint(), b4 = b.metric.x4.midpoint();
  if (a4 != b4) return a4 < b4;
  return a.metric.x2.midpoint() < b.metric.x2.midpoint();
}

/// A rational solution, fully certified by exact evaluation.
inline EinsteinSolution exact_solution(const FlagSpace& s, const Metric4<Rational>& g, SolutionKind kind, Origin origin) {
  EinsteinSolution sol;
  sol.metric = to_interval(g);
  sol.exact = g;
  sol.kind = kind;
  sol.origin = origin;
  sol.exact_einstein_constant = einstein_constant(s, g);
  sol.einstein_constant = RatInterval(*sol.exact_einstein_constant);
  sol.certificate.positivity = sgn(g.x1) > 0 && sgn(g.x2) > 0 && sgn(g.x3) > 0 && sgn(g.x4) > 0;
  sol.certificate.residual = "exact";
  return sol;
}

}  // namespace einflag
