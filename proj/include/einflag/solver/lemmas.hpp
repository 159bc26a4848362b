#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "einflag/closed_forms.hpp"
#include "einflag/realroots.hpp"
#include "einflag/resultant.hpp"
#include "einflag/solver/case1.hpp"
#include "einflag/solver/case2.hpp"

namespace einflag {

struct Witness {
  std::string name;
  std::string value;
  bool ok = true;  // informational entries are always ok
};

struct LemmaVerdict {
  std::string id;
  std::string statement;
  bool applicable = true;
  bool pass = true;
  std::vector<Witness> witnesses;

  bool passed() const { return !applicable || pass; }
};

struct LemmaReport {
  int n = 0, p = 0;
  std::vector<LemmaVerdict> verdicts;

  bool all_pass() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.passed(); });
  }
  const LemmaVerdict& at(const std::string& id) const {
    for (const auto& v : verdicts) {
      if (v.id == id) return v;
    }
    throw std::out_of_range("no lemma " + id);
  }
};

/// Derived polynomials the lemma checks run on.
struct LemmaInputs {
  UniPoly f, g;  // Case-1 quartics in x4 and x2
  UniPoly Q;     // quartic factor of Res_x4(F1, F2)
  UniPoly S;     // Res_x3(Q, x4 relation) / 32n^4(n+p+1), in x4
  UniPoly T;     // Res_x3(Q, P_{n,p}(x2, x3)) / its scalar, in x2
  UniPoly S_sylvester;     // Res_x3(Q, x4 relation) by Sylvester determinant, unscaled
  UniPoly S_subresultant;  // same resultant by subresultant PRS, unscaled
  UniPoly S_no_constant;       // Res_x3(Q, x4 relation without its constant term)
  Case2Data case2;
};

inline LemmaInputs lemma_inputs(int n, int p) {
  const FlagSpace s = make_flag_space(n, p);
  const EinsteinSystem sys = einstein_system(s);
  const Rational N = s.nq(), P = s.pq();
  LemmaInputs in;
  const Case1Data c1 = build_case1(s, sys);
  in.f = c1.f;
  in.g = c1.g;
  in.case2 = build_case2(s, sys);
  in.Q = factor_resultant_P(s, in.case2.F1, in.case2.F2).Q;
  const auto Q34 = BiPoly::from_univariate(in.Q, 0, {"x3", "x4"});
  const auto Q32 = BiPoly::from_univariate(in.Q, 0, {"x3", "x2"});
  in.S_subresultant = resultant(Q34, closed_form::x4_relation_polynomial(N, P), "x3").with_var("x4");
  in.S_sylvester = sylvester_resultant(Q34, closed_form::x4_relation_polynomial(N, P), "x3").with_var("x4");
  in.S_no_constant = resultant(Q34, closed_form::x4_relation_without_constant(N, P), "x3").with_var("x4");
  in.S = in.S_subresultant * Rational(1 / closed_form::S_scalar(N, P));
  in.T = (resultant(Q32, closed_form::x2_relation_polynomial(N, P), "x3") * Rational(1 / closed_form::T_scalar(N, P)))
             .with_var("x2");
  return in;
}

namespace detail {

class VerdictBuilder {
 public:
  VerdictBuilder(std::string id, std::string statement, bool applicable) {
    v_.id = std::move(id);
    v_.statement = std::move(statement);
    v_.applicable = applicable;
  }
  void check(const std::string& name, bool ok, const std::string& value = "") {
    v_.witnesses.push_back({name, value.empty() ? (ok ? "true" : "false") : value, ok});
    v_.pass = v_.pass && ok;
  }
  void info(const std::string& name, const std::string& value) { v_.witnesses.push_back({name, value, true}); }
  LemmaVerdict done() { return std::move(v_); }

 private:
  LemmaVerdict v_;
};

inline std::string q(const Rational& r) { return to_string(r); }

/// Number of distinct roots in the open interval (lo, hi); endpoints must not be roots.
inline int roots_between(const UniPoly& f, const Bound& lo, const Bound& hi) { return count_roots(f, lo, hi); }

inline std::pair<Rational, Rational> intersect_lines(const closed_form::Line& a, const closed_form::Line& b) {
  const Rational t = (b.value - a.value + a.slope * a.at - b.slope * b.at) / (a.slope - b.slope);
  return {t, a(t)};
}

}  // namespace detail

inline LemmaReport verify_lemmas(int n, int p, const LemmaInputs& in, const LemmaInputs& dual) {
  using detail::q;
  const Rational N(n), P(p);
  const bool upper = 2 * p >= n;  // n/2 <= p <= n-1
  const bool off_diagonal = 2 * p != n;
  LemmaReport rep;
  rep.n = n;
  rep.p = p;
  const UniPoly fp = derivative(in.f), fpp = derivative(fp);

  {
    detail::VerdictBuilder b("L1", "f(0) = 8(p+1)^2(n+p+1) > 0", true);
    const Rational f0 = in.f(Rational(0));
    b.check("f(0) closed form", f0 == 8 * (P + 1) * (P + 1) * (N + P + 1), q(f0));
    b.check("f(0) > 0", sgn(f0) > 0);
    rep.verdicts.push_back(b.done());
  }
  {
    detail::VerdictBuilder b("L2", "n/2 <= p <= n-1: f'(2(p-1)/n) < 0 < f'(2(p+1)/n); f' has one root u1 between",
                             upper);
    if (upper) {
      const Rational lo = 2 * (P - 1) / N, hi = 2 * (P + 1) / N;
      const Rational dl = fp(lo), du = fp(hi);
      b.check("f'(2(p-1)/n) closed form", dl == closed_form::df_at_lower(N, P), q(dl));
      b.check("f'(2(p-1)/n) < 0", sgn(dl) < 0);
      const Rational factor = -dl * N * N / (8 * (N - P + 1));
      b.check("shifted expansion of the cubic factor", factor == closed_form::df_at_lower_rewritten_factor(N, P),
              q(factor));
      b.check("f'(2(p+1)/n) closed form", du == closed_form::df_at_upper(N, P), q(du));
      b.check("f'(2(p+1)/n) > 0", sgn(du) > 0);
      const int c = count_roots(fp, lo, hi);
      b.check("roots of f' in (2(p-1)/n, 2(p+1)/n]", c == 1, std::to_string(c));
      if (c == 1) {
        const auto r = isolate_roots(fp, lo, hi).front();
        const IsolatedRoot u = refine(r, power_of_two(-40));
        b.info("u1", "[" + to_decimal(u.lo, 12) + ", " + to_decimal(u.hi, 12) + "]");
        b.info("u1 > 2(p-1)/(2n)", u.lo >= (P - 1) / N ? "true" : "false");
        b.info("u1 > 2(p-1)/n", u.lo >= lo ? "true" : "false");
      }
    }
    rep.verdicts.push_back(b.done());
  }
  {
    detail::VerdictBuilder b("L3", "n/2 <= p <= n-1: f'' > 0 on (0, inf), discriminant 192(n+1)h with h < 0", upper);
    if (upper) {
      b.check("f'' matches the closed-form quadratic", fpp == closed_form::d2f(N, P));
      const Rational A = fpp.coeff(2), B = fpp.coeff(1), C = fpp.coeff(0);
      const Rational disc = B * B - 4 * A * C, hv = closed_form::h(N, P);
      b.check("disc(f'') = 192(n+1)h", disc == 192 * (N + 1) * hv, q(disc));
      b.check("closed-form value = quarter discriminant 48(n+1)h",
              closed_form::d2f_quarter_discriminant(N, P) == 48 * (N + 1) * hv);
      const UniPoly hp = closed_form::h_in_p(N);
      b.check("h as a polynomial in p", hp(P) == hv);
      b.check("h < 0", sgn(hv) < 0, q(hv));
      const Rational ha = hp(N / 2), hb = hp(N - 1);
      b.check("h(n/2) closed form", ha == closed_form::h_at_half(N), q(ha));
      b.check("h(n-1) closed form", hb == closed_form::h_at_n_minus_1(N), q(hb));
      b.check("h(n/2) < 0 and h(n-1) < 0", sgn(ha) < 0 && sgn(hb) < 0);
      const UniPoly dh = derivative(hp), d2h = derivative(dh);
      b.check("h'' > 0 for p <= n-1", count_roots(d2h, std::nullopt, N - 1) == 0 && sgn(d2h(N - 1)) > 0);
      const Rational dh23 = dh(2 * N / 3), dh12 = dh(N / 2);
      b.check("h'(2n/3) closed form", dh23 == closed_form::dh_at_two_thirds(N), q(dh23));
      b.check("h'(2n/3) > 0", sgn(dh23) > 0);
      b.check("h'(n/2) = -n(n+1)(n^2-15n-10)/2", dh12 == -N * (N + 1) * (N * N - 15 * N - 10) / 2, q(dh12));
      b.info("h'(n/2) < 0", sgn(dh12) < 0 ? "true" : "false");
      // h is convex for p <= n-1, so on [n/2, n-1] it is bounded by its endpoint values.
      b.check("h < 0 on [n/2, n-1] from convexity and endpoints", sgn(ha) < 0 && sgn(hb) < 0 && sgn(d2h(N - 1)) > 0);
      b.check("f'' has no positive root", count_roots(fpp, Rational(0), std::nullopt) == 0 && sgn(A) > 0);
    }
    rep.verdicts.push_back(b.done());
  }
  {
    detail::VerdictBuilder b("L4", "tangent lines at 2(p-1)/n, 2(p+1)/n, 2p/n meet at positive ordinates", true);
    const closed_form::Line cl[3] = {closed_form::l1(N, P), closed_form::l2(N, P), closed_form::l3(N, P)};
    const Rational at[3] = {2 * (P - 1) / N, 2 * (P + 1) / N, 2 * P / N};
    closed_form::Line L[3];
    for (int k = 0; k < 3; ++k) {
      L[k] = {in.f(at[k]), fp(at[k]), at[k]};
      b.check("l" + std::to_string(k + 1) + " closed form", L[k].value == cl[k].value && L[k].slope == cl[k].slope);
    }
    const auto [a23, b23] = detail::intersect_lines(L[1], L[2]);
    const auto [a13, b13] = detail::intersect_lines(L[0], L[2]);
    b.check("l2 meets l3 at (alpha1, beta1)", a23 == closed_form::alpha1(N, P) && b23 == closed_form::beta1(N, P),
            "(" + q(a23) + ", " + q(b23) + ")");
    b.check("l1 meets l3 at (alpha2, beta2)", a13 == closed_form::alpha2(N, P) && b13 == closed_form::beta2(N, P),
            "(" + q(a13) + ", " + q(b13) + ")");
    b.check("beta1 shifted expansion", closed_form::beta1(N, P) == closed_form::beta1_rewritten(N, P));
    b.check("beta2 shifted expansion", closed_form::beta2(N, P) == closed_form::beta2_rewritten(N, P));
    b.check("beta1 > 0", sgn(b23) > 0);
    b.check("beta2 > 0", sgn(b13) > 0);
    if (upper) {
      b.check("intersections lie over their tangent intervals",
              at[0] <= a13 && a13 <= at[2] && at[2] <= a23 && a23 <= at[1]);
      b.check("f has no positive root", count_roots(in.f, Rational(0), std::nullopt) == 0);
    }
    rep.verdicts.push_back(b.done());
  }
  {
    detail::VerdictBuilder b("L5", "Q palindromic, Q(0), Q(1) > 0 > Q(1/2), four simple positive roots, two in (0,1)",
                             true);
    const UniPoly& Q = in.Q;
    b.check("palindromic", is_palindromic(Q));
    b.check("Q(0) = n^2(3n+4)", Q(Rational(0)) == N * N * (3 * N + 4), q(Q(Rational(0))));
    b.check("Q(1) = 32(p+1)(n-p+1)", Q(Rational(1)) == 32 * (P + 1) * (N - P + 1), q(Q(Rational(1))));
    const Rational qh = Q(Rational(1, 2));
    b.check("Q(1/2) closed form", qh == closed_form::Q_at_half(N, P), q(qh));
    if (p == 1) {
      b.check("Q(1/2) for p = 1", qh == closed_form::Q1_at_half(N));
    } else {
      const auto rw = closed_form::Q_at_half_rewritten(N, P);
      b.check("shifted expansions equal 16 Q(1/2)", rw[0] == 16 * qh && rw[1] == 16 * qh);
    }
    b.check("Q(1/2) < 0", sgn(qh) < 0);
    b.check("gcd(Q, Q') = 1", poly_gcd(Q, derivative(Q)).degree() == 0);
    const int pos = count_roots(Q, Rational(0), std::nullopt), unit = count_roots(Q, Rational(0), Rational(1));
    b.check("positive roots", pos == 4, std::to_string(pos));
    b.check("roots in (0,1)", unit == 2, std::to_string(unit));
    rep.verdicts.push_back(b.done());
  }
  {
    detail::VerdictBuilder b("L6", "S = Res_x3(Q, x4 relation) / 32n^4(n+p+1); sign pattern at 0, 2(p+1)/n, 2(2p-n)/n, (2p-n)/n",
                             true);
    b.check("subresultant and Sylvester routes agree", in.S_subresultant == in.S_sylvester);
    b.check("S matches the closed-form quartic", in.S == closed_form::S(N, P));
    b.info("x4 relation without its constant term gives a multiple of S", scalar_ratio(in.S_no_constant, in.S) ? "true" : "false");
    const Rational up = 2 * (P + 1) / N, dg = 2 * (2 * P - N) / N, gp = (2 * P - N) / N;
    const Rational s0 = in.S(Rational(0)), su = in.S(up), sdg = in.S(dg), sg = in.S(gp);
    b.check("S(0) closed form", s0 == closed_form::S_at_zero(N, P), q(s0));
    b.check("S(2(p+1)/n) closed form", su == closed_form::S_at_upper(N, P), q(su));
    b.check("S(2(p+1)/n) < 0", sgn(su) < 0);
    b.check("S(2(2p-n)/n) closed form", sdg == closed_form::S_at_double_gap(N, P), q(sdg));
    b.check("S((2p-n)/n) closed form", sg == closed_form::S_at_gap(N, P) && sg == closed_form::S_at_gap_rewritten(N, P),
            q(sg));
    const Rational m = N - P;
    b.check("5n^2-9np+3n+4p^2-4p = 5(n-p)^2+(p+3)(n-p)-p > 0",
            5 * N * N - 9 * N * P + 3 * N + 4 * P * P - 4 * P == 5 * m * m + (P + 3) * m - P &&
                sgn(5 * m * m + (P + 3) * m - P) > 0);
    if (off_diagonal) {
      b.check("S(0) > 0", sgn(s0) > 0);
      b.check("S(2(2p-n)/n) > 0", sgn(sdg) > 0);
      b.check("S((2p-n)/n) < 0", sgn(sg) < 0);
    }
    rep.verdicts.push_back(b.done());
  }
  {
    detail::VerdictBuilder b("L7", "n != 2p: root patterns of S and T and the interleaving with the breakpoints",
                             off_diagonal);
    if (off_diagonal) {
      const UniPoly& S = in.S;
      const UniPoly& T = in.T;
      b.check("T matches the closed-form quartic", T == closed_form::T(N, P));
      b.check("S square-free", poly_gcd(S, derivative(S)).degree() == 0);
      b.check("T square-free", poly_gcd(T, derivative(T)).degree() == 0);
      const Rational zero(0), up = 2 * (P + 1) / N, dg = 2 * (2 * P - N) / N, gp = (2 * P - N) / N;
      const int sp = count_roots(S, zero, std::nullopt), sn = count_roots(S, std::nullopt, zero);
      const int tp = count_roots(T, zero, std::nullopt), tn = count_roots(T, std::nullopt, zero);
      b.info("S positive/negative roots", std::to_string(sp) + "/" + std::to_string(sn));
      b.info("T positive/negative roots", std::to_string(tp) + "/" + std::to_string(tn));
      using detail::roots_between;
      if (2 * p < n) {
        b.check("n > 2p S: two positive, two negative", sp == 2 && sn == 2);
        b.check("n > 2p 2(2p-n)/n < x4^1 < (2p-n)/n < x4^2 < 0 < x4^3 < 2(p+1)/n < x4^4",
                roots_between(S, std::nullopt, dg) == 0 && roots_between(S, dg, gp) == 1 &&
                    roots_between(S, gp, zero) == 1 && roots_between(S, zero, up) == 1 &&
                    roots_between(S, up, std::nullopt) == 1);
        b.check("n > 2p T: four positive", tp == 4 && tn == 0);
      } else {
        b.check("n < 2p S: four positive", sp == 4 && sn == 0);
        b.check("n < 2p 0 < x4^1 < (2p-n)/n < x4^2 < 2(2p-n)/n < x4^3 < 2(p+1)/n < x4^4",
                roots_between(S, zero, gp) == 1 && roots_between(S, gp, dg) == 1 && roots_between(S, dg, up) == 1 &&
                    roots_between(S, up, std::nullopt) == 1);
        b.check("n < 2p T: two positive, two negative", tp == 2 && tn == 2);
      }
    }
    rep.verdicts.push_back(b.done());
  }
  {
    detail::VerdictBuilder b("L8", "g_{n,p} = f_{n,n-p} and T_{n,p} = S_{n,n-p}", true);
    b.check("g_{n,p} = f_{n,n-p}", in.g == dual.f);
    b.check("T_{n,p} = S_{n,n-p}", in.T == dual.S);
    rep.verdicts.push_back(b.done());
  }
  {
    detail::VerdictBuilder b("L9", "n != 2p: sub-case (a) resultants of the reduced pairs are the reference nonzero values",
                             off_diagonal);
    if (off_diagonal) {
      const auto subs = closed_form::subcases(N, P);
      for (int k = 0; k < 4; ++k) {
        const auto& sc = subs[k];
        const std::string tag = "sub-case " + std::to_string(k + 1);
        const UniPoly u1 = specialize_to_univariate(in.case2.F1, 0, sc.x3).with_var("x4");
        const UniPoly u2 = specialize_to_univariate(in.case2.F2, 0, sc.x3).with_var("x4");
        const UniPoly G = poly_gcd(u1, u2);
        b.check(tag + ": common factor is the expected linear factor", G == monic(sc.spurious_factor), to_string(G));
        if (G != monic(sc.spurious_factor)) continue;
        const UniPoly a = with_leading(exact_divide(u1, G), sc.lead_first);
        const UniPoly c = with_leading(exact_divide(u2, G), sc.lead_second);
        const Rational r = resultant(a, c);
        b.check(tag + ": resultant = reference value up to sign", r == sc.resultant || r == -sc.resultant, q(r));
        b.info(tag + ": sign", r == sc.resultant ? "+" : "-");
        b.check(tag + ": resultant nonzero", r != 0);
      }
    }
    rep.verdicts.push_back(b.done());
  }
  return rep;
}

inline LemmaReport verify_lemmas(int n, int p) {
  (void)make_flag_space(n, p);
  const LemmaInputs in = lemma_inputs(n, p);
  if (2 * p == n) return verify_lemmas(n, p, in, in);
  return verify_lemmas(n, p, in, lemma_inputs(n, n - p));
}

}  // namespace einflag
