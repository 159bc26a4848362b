#pragma once

#include <algorithm>
#include <vector>

#include "einflag/closed_forms.hpp"
#include "einflag/errors.hpp"
#include "einflag/flagmodel.hpp"
#include "einflag/realroots.hpp"
#include "einflag/resultant.hpp"
#include "einflag/solver/certify.hpp"
#include "einflag/solver/types.hpp"

namespace einflag {

/// x1 = x3 = 1: two equations in (x2, x4) and the two eliminants.
struct Case1Data {
  BiPoly eq1;  // from r1 - r2, variables (x2, x4)
  BiPoly eq2;  // from r3 - r4
  UniPoly f;   // in x4, leading coefficient n(n+1)(2n-p+1)
  UniPoly g;   // in x2, leading coefficient n(n+1)(n+p+1)
};

inline Case1Data build_case1(const FlagSpace& s, const EinsteinSystem& sys) {
  const Rational n = s.nq(), p = s.pq();
  if (!sys.normalized[0].specialize(2, Rational(1)).is_zero()) {
    throw CertificationError("r1 - r3 does not vanish on x1 = x3");
  }
  auto reduce = [](const Poly4& e) {
    return restrict_vars<2>(e.specialize(2, Rational(1)), std::array<std::size_t, 2>{1, 3}).clear_denominators();
  };
  Case1Data d;
  d.eq1 = reduce(sys.normalized[1]);
  d.eq2 = reduce(sys.normalized[2]);
  const auto display = closed_form::case1_equations(n, p);
  if (!scalar_ratio(d.eq1, display[0]) || !scalar_ratio(d.eq2, display[1])) {
    throw FixtureMismatch("Case-1 equations differ from the closed forms");
  }
  d.f = with_leading(resultant(d.eq1, d.eq2, "x2"), n * (n + 1) * (2 * n - p + 1));
  d.g = with_leading(resultant(d.eq1, d.eq2, "x4"), n * (n + 1) * (n + p + 1));
  if (d.f != closed_form::f(n, p)) throw FixtureMismatch("f differs from the closed-form quartic");
  if (d.g != closed_form::g(n, p)) throw FixtureMismatch("g differs from the closed-form quartic");
  return d;
}

inline Case1Data build_case1(const FlagSpace& s) { return build_case1(s, einstein_system(s)); }

namespace detail {

/// Substitute other = num/den (in the root variable) into a BiPoly and
/// return the cleared numerator as a polynomial in the root variable.
inline UniPoly substitute_partner(const BiPoly& e, std::size_t partner, const UniPoly& num, const UniPoly& den) {
  const std::size_t rootvar = 1 - partner;
  const auto N = BiPoly::from_univariate(num, rootvar, e.vars());
  const auto D = BiPoly::from_univariate(den, rootvar, e.vars());
  return e.substitute_fraction(partner, N, D).as_univariate(rootvar);
}

/// Solutions from the positive roots of `elim` (in variable `rootvar` of
/// eq1/eq2) with the partner variable given by num/den.
inline std::vector<EinsteinSolution> case1_side(const FlagSpace& s, const Case1Data& d, const UniPoly& elim,
                                                std::size_t rootvar, const std::pair<UniPoly, UniPoly>& partner,
                                                const std::vector<Metric4<Rational>>& kahler, const SolverOptions& opt) {
  std::vector<EinsteinSolution> out;
  const std::size_t other = 1 - rootvar;
  const UniPoly r1 = substitute_partner(d.eq1, other, partner.first, partner.second);
  const UniPoly r2 = substitute_partner(d.eq2, other, partner.first, partner.second);
  for (IsolatedRoot root : isolate_roots(elim, Rational(0), std::nullopt)) {
    if (!root_is_zero_of(root, r1) || !root_is_zero_of(root, r2)) continue;
    const auto enc = enclose_at_root(root, {{partner.first, partner.second}}, opt);
    if (enc.signs[0] <= 0) continue;
    IsolatedRoot rr = enc.root;
    const RatInterval rv = rr.interval(), pv = enc.values[0];
    const RatInterval x2 = rootvar == 0 ? rv : pv, x4 = rootvar == 0 ? pv : rv;
    EinsteinSolution sol;
    if (auto q = exactify(rr)) {
      const Rational pq = partner.first(*q) / partner.second(*q);
      const Metric4<Rational> g{Rational(1), rootvar == 0 ? *q : pq, Rational(1), rootvar == 0 ? pq : *q};
      const bool k = std::find(kahler.begin(), kahler.end(), g) != kahler.end();
      sol = exact_solution(s, g, k ? SolutionKind::Kahler : SolutionKind::NonKahler, Origin::Case1);
    } else {
      sol.metric = {RatInterval(Rational(1)), x2, RatInterval(Rational(1)), x4};
      sol.kind = SolutionKind::NonKahler;
      sol.origin = Origin::Case1;
      sol.einstein_constant = einstein_constant(s, sol.metric);
      sol.certificate.positivity = true;
      sol.certificate.residual = "ideal-membership";
      sol.defining_polynomial = elim;
    }
    out.push_back(std::move(sol));
  }
  return out;
}

}  // namespace detail

/**
 * Positive solutions with x1 = x3: the positive roots of f (partner x2 from
 * the second equation) and of g (partner x4 from the first), each checked to
 * satisfy both equations exactly. Expected to be empty.
 */
inline std::vector<EinsteinSolution> solve_case1(const FlagSpace& s, const Case1Data& d,
                                                 const std::vector<Metric4<Rational>>& kahler,
                                                 const SolverOptions& opt = {}) {
  const Rational n = s.nq(), p = s.pq();
  auto out = detail::case1_side(s, d, d.f, 1, closed_form::case1_x2_of_x4(n, p), kahler, opt);
  auto more = detail::case1_side(s, d, d.g, 0, closed_form::case1_x4_of_x2(n, p), kahler, opt);
  for (auto& m : more) {
    const bool dup = std::any_of(out.begin(), out.end(), [&](const EinsteinSolution& o) { return same_metric(o, m); });
    if (!dup) out.push_back(std::move(m));
  }
  return out;
}

inline std::vector<EinsteinSolution> solve_case1(const FlagSpace& s, const SolverOptions& opt = {}) {
  const auto sys = einstein_system(s);
  return solve_case1(s, build_case1(s, sys), kahler_einstein_metrics(s, sys), opt);
}

}  // namespace einflag
