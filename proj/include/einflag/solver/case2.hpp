#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "einflag/closed_forms.hpp"
#include "einflag/errors.hpp"
#include "einflag/flagmodel.hpp"
#include "einflag/realroots.hpp"
#include "einflag/resultant.hpp"
#include "einflag/solver/certify.hpp"
#include "einflag/solver/types.hpp"

namespace einflag {

/// x1 != x3, x1 = 1: x2 eliminated through the factor of r1 - r3 that is
/// linear in x2, leaving F1, F2 in (x3, x4).
struct Case2Data {
  Poly4 linear_factor;  // r1 - r3 divided by (x1 - x3), with x1 = 1
  BiPoly x2_num;        // x2 = x2_num / x2_den, variables (x3, x4)
  BiPoly x2_den;
  BiPoly F1;  // from r1 - r2
  BiPoly F2;  // from r3 - r4
  std::vector<std::string> stripped;  // extraneous factors removed while clearing
};

namespace detail {

inline BiPoly to_x3x4(const Poly4& e) { return restrict_vars<2>(e, std::array<std::size_t, 2>{2, 3}).with_vars({"x3", "x4"}); }

inline Poly4 from_x3x4(const BiPoly& b) {
  Poly4 r;
  for (const auto& [e, c] : b.terms()) r += Poly4::term(c, {0, 0, e[0], e[1]});
  return r;
}

}  // namespace detail

inline Case2Data build_case2(const FlagSpace& s, const EinsteinSystem& sys) {
  const Rational n = s.nq(), p = s.pq();
  Case2Data d;
  const Poly4 x1_minus_x3 = Poly4::variable(0) - Poly4::variable(2);
  const Poly4 K = exact_divide(sys.homogeneous[0], x1_minus_x3).specialize(0, Rational(1));
  if (K.degree_in(1) != 1) throw CertificationError("the second factor of r1 - r3 is not linear in x2");
  d.linear_factor = K;
  const auto kc = K.coefficients_in(1);
  d.x2_num = detail::to_x3x4(-kc[0]);
  d.x2_den = detail::to_x3x4(kc[1]);
  const auto [rel_num, rel_den] = closed_form::x2_relation(n, p);
  if (!(d.x2_num * rel_den == rel_num * d.x2_den)) throw FixtureMismatch("x2 relation differs from the closed form");
  // Rescale to the closed-form numerator/denominator pair.
  const Rational r = *scalar_ratio(d.x2_den, rel_den);
  d.x2_num = d.x2_num * Rational(1 / r);
  d.x2_den = rel_den;

  const Poly4 N = detail::from_x3x4(d.x2_num), D = detail::from_x3x4(d.x2_den);
  const BiPoly x3p1 = BiPoly::variable(0, {"x3", "x4"}) + Rational(1);
  auto reduce = [&](const Poly4& e, const std::string& name) {
    BiPoly b = detail::to_x3x4(e.substitute_fraction(1, N, D));
    const int deg4 = b.min_exponent(1), deg3 = b.min_exponent(0);
    b = b.clear_denominators();
    if (deg4 > 0) d.stripped.push_back(name + ": x4^" + std::to_string(deg4));
    if (deg3 > 0) d.stripped.push_back(name + ": x3^" + std::to_string(deg3));
    int k = 0;
    while (true) {
      try {
        b = exact_divide(b, x3p1);
        ++k;
      } catch (const NotDivisible&) {
        break;
      }
    }
    if (k > 0) d.stripped.push_back(name + ": (x3+1)^" + std::to_string(k));
    try {
      (void)exact_divide(b, d.x2_den);
      throw DegenerateDenominator(name + " is divisible by the denominator of the x2 relation");
    } catch (const NotDivisible&) {
    }
    return b;
  };
  d.F1 = reduce(sys.normalized[1], "F1");
  d.F2 = reduce(sys.normalized[2], "F2");
  const Rational a1 = d.F1.coeff({4, 0}), a2 = d.F2.coeff({3, 0});
  if (a1 == 0 || a2 == 0) throw FixtureMismatch("anchor coefficient of F1/F2 vanishes");
  d.F1 = d.F1 * Rational(-2 * p * (p + 1) * (p + 1) / a1);
  d.F2 = d.F2 * Rational(2 * (p + 1) * (n - p) / a2);
  if (!(d.F1 == closed_form::F1(n, p))) throw FixtureMismatch("F1 differs from the closed form");
  if (!(d.F2 == closed_form::F2(n, p))) throw FixtureMismatch("F2 differs from the closed form");
  return d;
}

inline Case2Data build_case2(const FlagSpace& s) { return build_case2(s, einstein_system(s)); }

struct PFactorization {
  UniPoly P;                          // Res_x4(F1, F2)
  std::array<Rational, 4> linear_roots;  // x3 of sub-cases 1..4
  UniPoly Q;                          // leading coefficient n^2(3n+4)
  Rational scalar;                    // P = scalar (x3+1)^4 L1 L2 L3 L4 Q
  bool scalar_matches_closed_form = false;
};

inline PFactorization factor_resultant_P(const FlagSpace& s, const BiPoly& F1, const BiPoly& F2) {
  const Rational n = s.nq(), p = s.pq();
  PFactorization out;
  out.P = resultant(F1, F2, "x4");
  UniPoly rest = out.P;
  const auto lin = closed_form::P_linear_factors(n, p);
  try {
    const UniPoly x3p1({1, 1}, "x3");
    for (int k = 0; k < 4; ++k) rest = exact_divide(rest, x3p1);
    for (const auto& l : lin) rest = exact_divide(rest, l);
  } catch (const NotDivisible& e) {
    throw FactorizationMismatch(std::string("P does not factor as expected: ") + e.what());
  }
  if (rest.degree() != 4) throw FactorizationMismatch("cofactor of P is not a quartic");
  out.Q = with_leading(rest, n * n * (3 * n + 4)).with_var("x3");
  if (out.Q != closed_form::Q(n, p)) throw FactorizationMismatch("quartic factor of P differs from Q");
  out.scalar = rest.leading() / out.Q.leading();
  out.scalar_matches_closed_form = out.scalar == closed_form::P_scalar(n, p);
  auto root = [](const UniPoly& l) { return Rational(-l.coeff(0) / l.coeff(1)); };
  out.linear_roots = {root(lin[0]), root(lin[1]), root(lin[3]), root(lin[2])};
  return out;
}

namespace detail {

inline Origin subcase_origin(int k) {
  static const Origin o[4] = {Origin::Case2aSub1, Origin::Case2aSub2, Origin::Case2aSub3, Origin::Case2aSub4};
  return o[k];
}

}  // namespace detail

/**
 * Sub-case (a): x3 is one of the four rational roots. The common positive
 * roots of F1(x3, .) and F2(x3, .) give x4, the x2 relation gives x2; every
 * admissible tuple must be one of the Kahler-Einstein tuples.
 */
inline std::vector<EinsteinSolution> solve_case2a(const FlagSpace& s, const PFactorization& pf, const Case2Data& d,
                                                  const EinsteinSystem& sys,
                                                  const std::vector<Metric4<Rational>>& kahler,
                                                  const SolverOptions& opt = {}) {
  std::vector<EinsteinSolution> out;
  std::vector<Rational> seen;
  for (int k = 0; k < 4; ++k) {
    const Rational x3 = pf.linear_roots[k];
    if (std::find(seen.begin(), seen.end(), x3) != seen.end()) continue;
    seen.push_back(x3);
    if (sgn(x3) <= 0) continue;
    const UniPoly u1 = specialize_to_univariate(d.F1, 0, x3), u2 = specialize_to_univariate(d.F2, 0, x3);
    const UniPoly G = poly_gcd(u1, u2);
    if (G.degree() < 1) continue;
    const UniPoly num = specialize_to_univariate(d.x2_num, 0, x3), den = specialize_to_univariate(d.x2_den, 0, x3);
    for (IsolatedRoot root : isolate_roots(G, Rational(0), std::nullopt)) {
      if (root_is_zero_of(root, den)) continue;
      if (auto x4 = exactify(root)) {
        const Rational x2 = num(*x4) / den(*x4);
        if (sgn(x2) <= 0) continue;
        const Metric4<Rational> g{Rational(1), x2, x3, *x4};
        if (!is_einstein(sys, g)) throw CertificationError("case (a) tuple fails the Einstein system");
        if (std::find(kahler.begin(), kahler.end(), g) == kahler.end()) {
          throw UnexpectedNonKahler("case (a) tuple (1, " + to_string(x2) + ", " + to_string(x3) + ", " +
                                    to_string(*x4) + ") is not Kahler-Einstein");
        }
        out.push_back(exact_solution(s, g, SolutionKind::Kahler, detail::subcase_origin(k)));
      } else {
        const auto enc = enclose_at_root(root, {{num, den}}, opt);
        if (enc.signs[0] > 0) throw UnexpectedNonKahler("case (a) produced an irrational positive tuple");
      }
    }
  }
  return out;
}

/// Checks behind the case (b) solutions.
struct Case2bReport {
  bool square_free = false;         // gcd(Q, Q') = 1
  bool denominators_nonzero = false;  // x4_on_Q, x2_on_Q denominators coprime to Q
  bool membership = false;          // F1, F2 and the Einstein system vanish mod Q under x4_on_Q, x2_on_Q
  bool uniqueness = false;          // one common x4 per root of Q (first subresultant)
  int positive_roots = 0;
  int admissible = 0;
};

struct Case2bResult {
  std::vector<EinsteinSolution> solutions;
  Case2bReport report;
};

inline Case2bResult solve_case2b_detailed(const FlagSpace& s, const UniPoly& Q, const Case2Data& d,
                                          const EinsteinSystem& sys, const std::vector<Metric4<Rational>>& kahler,
                                          const SolverOptions& opt = {}) {
  const Rational n = s.nq(), p = s.pq();
  Case2bResult res;
  auto& rep = res.report;
  rep.square_free = poly_gcd(Q, derivative(Q)).degree() == 0;
  if (!rep.square_free) throw CertificationError("Q is not square-free");
  const auto [x4n, x4d] = closed_form::x4_on_Q(n, p);
  const auto [x2n, x2d] = closed_form::x2_on_Q(n, p);
  rep.denominators_nonzero = poly_gcd(Q, x4d).degree() == 0 && poly_gcd(Q, x2d).degree() == 0;
  if (!rep.denominators_nonzero) throw MembershipFailure("a relation denominator shares a root with Q");

  const BiPoly::Names bn{"x3", "x4"};
  const auto X4nb = BiPoly::from_univariate(x4n, 0, bn), X4db = BiPoly::from_univariate(x4d, 0, bn);
  for (const auto* F : {&d.F1, &d.F2}) {
    const UniPoly r = F->substitute_fraction(1, X4nb, X4db).as_univariate(0);
    if (!remainder(r, Q).is_zero()) throw MembershipFailure("F1/F2 do not vanish on the roots of Q under x4_on_Q");
  }
  const auto X4n = Poly4::from_univariate(x4n, 2), X4d = Poly4::from_univariate(x4d, 2);
  const auto X2n = Poly4::from_univariate(x2n, 2), X2d = Poly4::from_univariate(x2d, 2);
  for (const auto& e : sys.normalized) {
    const UniPoly r = e.substitute_fraction(3, X4n, X4d).substitute_fraction(1, X2n, X2d).as_univariate(2);
    if (!remainder(r, Q).is_zero()) throw MembershipFailure("Einstein system does not vanish mod Q under x4_on_Q, x2_on_Q");
  }
  rep.membership = true;

  const auto S1 = subresultant(d.F1, d.F2, "x4", 1);
  if (S1.size() < 2) throw CertificationError("first subresultant of F1, F2 is degenerate");
  const UniPoly s0 = S1[0].with_var("x3"), s1 = S1[1].with_var("x3");
  rep.uniqueness = poly_gcd(s1, Q).degree() == 0 && remainder(s1 * x4n + s0 * x4d, Q).is_zero();
  if (!rep.uniqueness) throw CertificationError("x4 is not unique on the roots of Q");

  // One spare bit so that outward rounding keeps widths within the target.
  SolverOptions fine = opt;
  fine.precision_bits += 1;
  const long bits = opt.precision_bits + 8;
  for (IsolatedRoot root : isolate_roots(Q, Rational(0), std::nullopt)) {
    ++rep.positive_roots;
    const auto enc = enclose_at_root(root, {{x2n, x2d}, {x4n, x4d}}, fine);
    if (enc.signs[0] <= 0 || enc.signs[1] <= 0) continue;
    ++rep.admissible;
    IsolatedRoot rr = enc.root;
    EinsteinSolution sol;
    if (auto x3 = exactify(rr)) {
      const Metric4<Rational> g{Rational(1), x2n(*x3) / x2d(*x3), *x3, x4n(*x3) / x4d(*x3)};
      const bool k = std::find(kahler.begin(), kahler.end(), g) != kahler.end();
      sol = exact_solution(s, g, k ? SolutionKind::Kahler : SolutionKind::NonKahler, Origin::Case2b);
    } else {
      sol.metric = {RatInterval(Rational(1)), round_outward(enc.values[0], bits), enc.root.interval(),
                    round_outward(enc.values[1], bits)};
      sol.kind = SolutionKind::NonKahler;
      sol.origin = Origin::Case2b;
      sol.einstein_constant = round_outward(einstein_constant(s, sol.metric), bits);
      sol.certificate.positivity = true;
      sol.certificate.residual = "ideal-membership";
      sol.defining_polynomial = Q;
    }
    res.solutions.push_back(std::move(sol));
  }
  return res;
}

inline std::vector<EinsteinSolution> solve_case2b(const FlagSpace& s, const UniPoly& Q, const Case2Data& d,
                                                  const EinsteinSystem& sys,
                                                  const std::vector<Metric4<Rational>>& kahler,
                                                  const SolverOptions& opt = {}) {
  return solve_case2b_detailed(s, Q, d, sys, kahler, opt).solutions;
}

}  // namespace einflag
