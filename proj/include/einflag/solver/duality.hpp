#pragma once

#include <vector>

#include "einflag/solver/enumerate.hpp"

namespace einflag {

/// (x1, x2, x3, x4) -> (x1, x4, x3, x2): the p <-> n-p exchange.
inline EinsteinSolution swap_x2_x4(const EinsteinSolution& s) {
  EinsteinSolution t = s;
  std::swap(t.metric.x2, t.metric.x4);
  if (t.exact) std::swap(t.exact->x2, t.exact->x4);
  return t;
}

/// Relabel m1 <-> m3 and rescale back to x1 = 1: (1, x2/x3, 1/x3, x4/x3).
inline Metric4<RatInterval> relabel_x1_x3(const Metric4<RatInterval>& g) {
  return {RatInterval(Rational(1)), g.x2 / g.x3, g.x1 / g.x3, g.x4 / g.x3};
}

/// True iff `b` is the image of `a` under the swap, matched one-to-one with equal kinds.
inline bool duality_check(const std::vector<EinsteinSolution>& a, const std::vector<EinsteinSolution>& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& s : a) {
    const EinsteinSolution t = swap_x2_x4(s);
    int hit = -1;
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (b[k].kind == t.kind && same_metric(t, b[k])) {
        if (hit >= 0 || used[k]) return false;
        hit = static_cast<int>(k);
      }
    }
    if (hit < 0) return false;
    used[static_cast<std::size_t>(hit)] = true;
  }
  return true;
}

inline bool duality_check(int n, int p, const SolverOptions& opt = SolverOptions::from_environment()) {
  const auto a = enumerate_einstein(n, p, opt);
  const auto b = p == n - p ? a : enumerate_einstein(n, n - p, opt);
  return duality_check(a, b);
}

/// The non-Kahler tuples come in a pair exchanged by x3 -> 1/x3 with the m1 <-> m3 relabel.
inline bool nonkahler_pairing(const std::vector<EinsteinSolution>& sols) {
  std::vector<const EinsteinSolution*> nk;
  for (const auto& s : sols) {
    if (s.kind == SolutionKind::NonKahler) nk.push_back(&s);
  }
  if (nk.size() != 2) return false;
  EinsteinSolution img = *nk[0];
  img.metric = relabel_x1_x3(nk[0]->metric);
  img.exact.reset();
  return same_metric(img, *nk[1]) && !same_metric(*nk[0], *nk[1]);
}

}  // namespace einflag
