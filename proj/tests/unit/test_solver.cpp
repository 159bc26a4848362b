#include <cstdlib>

#include <gtest/gtest.h>

#include "einflag/einflag.hpp"

using namespace einflag;

namespace {

const SolverOptions kOpt;

bool has_tuple(const std::vector<EinsteinSolution>& sols, const Metric4<Rational>& g) {
  return std::any_of(sols.begin(), sols.end(), [&](const auto& s) { return s.exact && *s.exact == g; });
}

}  // namespace

TEST(Case1, Quartics) {
  const auto a = build_case1(make_flag_space(3, 2), einstein_system(make_flag_space(3, 2)));
  EXPECT_EQ(a.f.coeff(0), 432);
  const auto b = build_case1(make_flag_space(3, 1), einstein_system(make_flag_space(3, 1)));
  EXPECT_EQ(b.g, a.f);
  const auto c = build_case1(make_flag_space(4, 2), einstein_system(make_flag_space(4, 2)));
  EXPECT_EQ(c.f.leading(), 140);
}

TEST(Case1, NoSolutions) {
  for (auto [n, p] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}, {10, 7}, {10, 2}}) {
    EXPECT_TRUE(solve_case1(make_flag_space(n, p), kOpt).empty()) << n << "," << p;
  }
}

TEST(Case2, ReducedEquations) {
  const auto d = build_case2(make_flag_space(3, 1));
  EXPECT_EQ(d.F2.coeff({3, 0}), 8);
  EXPECT_EQ(d.F2.coeff({0, 3}), 48);
  const auto e = build_case2(make_flag_space(4, 2));
  EXPECT_EQ(e.F1.coeff({4, 0}), -36);
}

TEST(Case2, Factorization) {
  const FlagSpace s = make_flag_space(3, 1);
  const auto d = build_case2(s);
  const auto pf = factor_resultant_P(s, d.F1, d.F2);
  EXPECT_EQ(pf.linear_roots, (std::array<Rational, 4>{make_rational(7, 3), 3, make_rational(3, 7), make_rational(1, 3)}));
  EXPECT_EQ(pf.Q, UniPoly({117, -912, 1782, -912, 117}));
  EXPECT_TRUE(pf.scalar_matches_closed_form);
  for (int n = 3; n <= 9; ++n)
    for (int p = 1; p < n; ++p) {
      const FlagSpace t = make_flag_space(n, p);
      const auto dd = build_case2(t);
      EXPECT_TRUE(is_palindromic(factor_resultant_P(t, dd.F1, dd.F2).Q));
    }
}

TEST(Case2, SubcaseA) {
  const FlagSpace s = make_flag_space(3, 1);
  const auto sys = einstein_system(s);
  const auto d = build_case2(s, sys);
  const auto pf = factor_resultant_P(s, d.F1, d.F2);
  const auto kl = kahler_einstein_metrics(s, sys);
  const auto sols = solve_case2a(s, pf, d, sys, kl, kOpt);
  ASSERT_EQ(sols.size(), 4u);
  EXPECT_TRUE(has_tuple(sols, {1, make_rational(10, 3), make_rational(7, 3), make_rational(4, 3)}));
  EXPECT_TRUE(has_tuple(sols, {1, make_rational(2, 3), make_rational(1, 3), make_rational(4, 3)}));
  for (const auto& x : sols) EXPECT_EQ(x.kind, SolutionKind::Kahler);

  const auto r = run_pipeline(4, 2, kOpt);
  EXPECT_EQ(r.case2a_solutions.size(), 4u);
  EXPECT_TRUE(has_tuple(r.case2a_solutions, {1, make_rational(7, 2), make_rational(5, 2), make_rational(3, 2)}));
  EXPECT_TRUE(has_tuple(r.case2a_solutions, {1, make_rational(3, 2), make_rational(5, 2), make_rational(7, 2)}));
}

TEST(Case2, SubcaseB) {
  const auto r = run_pipeline(3, 1, kOpt);
  ASSERT_EQ(r.case2b_solutions.size(), 2u);
  EXPECT_EQ(r.case2b.positive_roots, 4);
  EXPECT_TRUE(r.case2b.membership && r.case2b.uniqueness && r.case2b.square_free);
  const double expected[2][3] = {{1.1686214533, 0.500765459710246, 0.7237236345},
                                 {2.3336702455, 1.996942841422453, 1.4452347311}};
  for (int k = 0; k < 2; ++k) {
    const auto& s = r.case2b_solutions[k];
    EXPECT_EQ(s.kind, SolutionKind::NonKahler);
    EXPECT_EQ(s.certificate.residual, "ideal-membership");
    EXPECT_TRUE(s.certificate.positivity);
    EXPECT_NEAR(s.metric.x2.midpoint().get_d(), expected[k][0], 1e-9);
    EXPECT_NEAR(s.metric.x3.midpoint().get_d(), expected[k][1], 1e-13);
    EXPECT_NEAR(s.metric.x4.midpoint().get_d(), expected[k][2], 1e-9);
    for (const auto& x : s.metric.as_array()) EXPECT_LE(x.width(), power_of_two(-80));
    EXPECT_GT(s.einstein_constant.lo(), 0);
  }
  EXPECT_EQ(run_pipeline(4, 2, kOpt).case2b_solutions.size(), 2u);
}

TEST(Enumerate, MainCount) {
  for (auto [n, p] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}, {20, 3}}) {
    const auto r = run_pipeline(n, p, kOpt);
    EXPECT_EQ(r.solutions.size(), 6u);
    EXPECT_EQ(r.count(SolutionKind::Kahler), 4);
    EXPECT_EQ(r.count(SolutionKind::NonKahler), 2);
    for (std::size_t k = 1; k < r.solutions.size(); ++k)
      EXPECT_LT(r.solutions[k - 1].metric.x3.midpoint(), r.solutions[k].metric.x3.midpoint() + 1);
    for (std::size_t i = 0; i < r.solutions.size(); ++i)
      for (std::size_t j = i + 1; j < r.solutions.size(); ++j)
        EXPECT_FALSE(same_metric(r.solutions[i], r.solutions[j]));
    EXPECT_TRUE(nonkahler_pairing(r.solutions));
  }
  const auto s31 = enumerate_einstein(3, 1, kOpt);
  EXPECT_TRUE(std::is_sorted(s31.begin(), s31.end(), solution_less));
}

TEST(Enumerate, KahlerSetEquality) {
  for (auto [n, p] : std::vector<std::pair<int, int>>{{3, 2}, {6, 3}, {9, 4}}) {
    const auto r = run_pipeline(n, p, kOpt);
    ASSERT_EQ(r.case2a_solutions.size(), r.kahler.size());
    for (const auto& g : r.kahler) EXPECT_TRUE(has_tuple(r.case2a_solutions, g));
  }
}

TEST(Enumerate, InvalidInput) { EXPECT_THROW(enumerate_einstein(3, 3, kOpt), InvalidParameters); }

TEST(Lemmas, ThreeOne) {
  const auto rep = verify_lemmas(3, 1);
  EXPECT_TRUE(rep.all_pass());
  EXPECT_FALSE(rep.at("L2").applicable);
  EXPECT_FALSE(rep.at("L3").applicable);
  EXPECT_TRUE(rep.at("L7").applicable);
  bool saw = false;
  for (const auto& w : rep.at("L5").witnesses) {
    if (w.name == "Q(1/2) closed form") {
      EXPECT_EQ(w.value, "-3/16");
      saw = true;
    }
  }
  EXPECT_TRUE(saw);
  EXPECT_TRUE(rep.at("L8").pass);
}

TEST(Lemmas, UpperRange) {
  const auto rep = verify_lemmas(10, 7);
  EXPECT_TRUE(rep.all_pass());
  EXPECT_TRUE(rep.at("L2").applicable && rep.at("L2").pass);
  EXPECT_TRUE(rep.at("L3").applicable && rep.at("L3").pass);
  const auto diag = verify_lemmas(6, 3);
  EXPECT_TRUE(diag.all_pass());
  EXPECT_FALSE(diag.at("L7").applicable);
  EXPECT_FALSE(diag.at("L9").applicable);
}

TEST(Duality, Pairs) {
  EXPECT_TRUE(duality_check(3, 1, kOpt));
  EXPECT_TRUE(duality_check(4, 2, kOpt));
  EXPECT_TRUE(duality_check(7, 3, kOpt));
  const auto a = enumerate_einstein(3, 1, kOpt), b = enumerate_einstein(3, 2, kOpt);
  EXPECT_TRUE(has_tuple(b, {1, make_rational(4, 3), make_rational(7, 3), make_rational(10, 3)}));
  EXPECT_FALSE(duality_check(a, a));
}

TEST(Newton, MatchesCertifiedSolutions) {
  for (auto [n, p] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}, {5, 2}}) {
    const auto approx = newton_oracle(n, p);
    const auto sols = enumerate_einstein(n, p, kOpt);
    ASSERT_EQ(approx.size(), sols.size());
    for (std::size_t k = 0; k < sols.size(); ++k) {
      const auto m = sols[k].metric.as_array();
      for (int c = 1; c < 4; ++c) EXPECT_NEAR(approx[k][c], m[c].midpoint().get_d(), 1e-8);
    }
  }
}

TEST(Certify, PositivityUndecidedAtCap) {
  const auto root = isolate_roots(UniPoly({-2, 0, 1}), Rational(0), std::nullopt).front();
  SolverOptions tight;
  tight.precision_bits = 10;
  tight.cap_bits = 20;
  // numerator vanishes within 1e-9 of sqrt(2) but not at it
  const UniPoly num({-make_rational(141421356237LL, 100000000000LL), 1});
  EXPECT_THROW(enclose_at_root(root, {{num, UniPoly::constant(1)}}, tight), PositivityUndecided);
  EXPECT_THROW(enclose_at_root(root, {{UniPoly::constant(1), UniPoly({-2, 0, 1})}}, kOpt), DegenerateDenominator);
  const auto ok = enclose_at_root(root, {{UniPoly({-2, 0, 1}), UniPoly::constant(1)}, {UniPoly({0, 1}), UniPoly::constant(1)}}, kOpt);
  EXPECT_EQ(ok.signs, (std::vector<int>{0, 1}));
  EXPECT_LE(ok.values[1].width(), power_of_two(-80));
}

TEST(Options, Environment) {
  setenv("EINFLAG_PRECISION", "100", 1);
  EXPECT_EQ(SolverOptions::from_environment().precision_bits, 100);
  setenv("EINFLAG_PRECISION", "junk", 1);
  EXPECT_EQ(SolverOptions::from_environment().precision_bits, 80);
  unsetenv("EINFLAG_PRECISION");
  SolverOptions o;
  o.precision_bits = 120;
  for (const auto& s : enumerate_einstein(5, 1, o))
    for (const auto& x : s.metric.as_array()) EXPECT_LE(x.width(), power_of_two(-120));
}
