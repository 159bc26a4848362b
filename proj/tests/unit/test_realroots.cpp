#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "einflag/closed_forms.hpp"
#include "einflag/interval.hpp"
#include "einflag/realroots.hpp"

using namespace einflag;

namespace {

std::mt19937 rng(7);

/// Roots of a palindromic quartic through y = x + 1/x, in long double.
std::vector<long double> palindromic_roots(const UniPoly& q) {
  const long double a4 = q.coeff(4).get_d(), a3 = q.coeff(3).get_d(), a2 = q.coeff(2).get_d();
  const long double A = a4, B = a3, C = a2 - 2 * a4;
  const long double disc = std::sqrt(B * B - 4 * A * C);
  std::vector<long double> out;
  for (long double y : {(-B - disc) / (2 * A), (-B + disc) / (2 * A)}) {
    const long double s = std::sqrt(y * y - 4);
    out.push_back((y - s) / 2);
    out.push_back((y + s) / 2);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(CountRoots, Basic) {
  const UniPoly f({-2, 0, 1});
  EXPECT_EQ(count_roots(f, Rational(0), std::nullopt), 1);
  EXPECT_EQ(count_roots(f), 2);
  EXPECT_EQ(count_roots(UniPoly({1, 0, 1})), 0);
  // half-open (lo, hi]
  EXPECT_EQ(count_roots(UniPoly({-1, 1}), Rational(1), Rational(2)), 0);
  EXPECT_EQ(count_roots(UniPoly({-1, 1}), Rational(0), Rational(1)), 1);
}

TEST(CountRoots, PublishedQuartics) {
  const UniPoly q = closed_form::Q(3, 1);
  EXPECT_EQ(count_roots(q, Rational(0), std::nullopt), 4);
  EXPECT_EQ(count_roots(q, Rational(0), Rational(1)), 2);
  const UniPoly s = closed_form::S(3, 1);
  EXPECT_EQ(count_roots(s, Rational(0), std::nullopt), 2);
  EXPECT_EQ(count_roots(s, std::nullopt, Rational(0)), 2);
}

TEST(CountRoots, ProductsOfKnownFactors) {
  std::uniform_int_distribution<int> small(-6, 6), pos(1, 6);
  for (int t = 0; t < 60; ++t) {
    UniPoly f = UniPoly::constant(1);
    std::vector<Rational> real;
    const int nlin = t % 4 + 1, nquad = t % 3;
    for (int k = 0; k < nlin; ++k) {
      const Rational r = make_rational(small(rng), pos(rng));
      f = f * UniPoly({-r, 1});
      if (std::find(real.begin(), real.end(), r) == real.end()) real.push_back(r);
    }
    for (int k = 0; k < nquad; ++k) f = f * UniPoly({Rational(pos(rng)), Rational(small(rng) % 2), 1});
    EXPECT_EQ(count_roots(f), static_cast<int>(real.size()));
    const auto iso = isolate_roots(f);
    ASSERT_EQ(iso.size(), real.size());
    for (std::size_t k = 1; k < iso.size(); ++k) EXPECT_LE(iso[k - 1].hi, iso[k].lo);
    for (const auto& r : iso) EXPECT_EQ(r.is_exact() ? 1 : count_roots(f, r.lo, r.hi), 1);
  }
}

TEST(Isolate, SqrtTwo) {
  const auto roots = isolate_roots(UniPoly({-2, 0, 1}), Rational(0), std::nullopt);
  ASSERT_EQ(roots.size(), 1u);
  const IsolatedRoot r = refine(roots[0], make_rational(1, 10000000000L));
  EXPECT_LE(r.width(), make_rational(1, 10000000000L));
  EXPECT_LE(r.lo * r.lo, 2);
  EXPECT_GE(r.hi * r.hi, 2);
  EXPECT_NEAR(r.lo.get_d(), 1.4142135623, 1e-9);
}

TEST(Isolate, PalindromicOracle) {
  for (auto [n, p] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}, {7, 3}, {12, 11}}) {
    const UniPoly q = closed_form::Q(n, p);
    const auto oracle = palindromic_roots(q);
    const auto roots = isolate_roots(q, Rational(0), std::nullopt);
    ASSERT_EQ(roots.size(), 4u);
    for (int k = 0; k < 4; ++k) {
      const IsolatedRoot r = refine(roots[k], power_of_two(-60));
      EXPECT_NEAR(static_cast<double>(oracle[k]), r.lo.get_d(), 1e-12);
    }
    // alpha root => 1/alpha root
    for (int k = 0; k < 4; ++k) {
      const IsolatedRoot r = refine(roots[k], power_of_two(-40));
      const RatInterval inv = reciprocal(r.interval());
      const IsolatedRoot m = refine(roots[3 - k], power_of_two(-40));
      EXPECT_TRUE(overlaps(inv, m.interval()));
    }
  }
  const auto r31 = isolate_roots(closed_form::Q(3, 1), Rational(0), std::nullopt);
  const double expected[4] = {0.196035056212967, 0.500765459710246, 1.996942841422453, 5.101128437526128};
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(refine(r31[k], power_of_two(-50)).lo.get_d(), expected[k], 1e-13);
}

TEST(Isolate, ExactRootsAndMultiplicity) {
  const UniPoly f = UniPoly({-1, 3}) * UniPoly({-1, 3}) * UniPoly({-2, 0, 1});
  const auto roots = isolate_roots(f);
  ASSERT_EQ(roots.size(), 3u);
  bool saw_exact = false;
  for (auto r : roots) {
    if (auto x = exactify(r)) {
      EXPECT_EQ(*x, make_rational(1, 3));
      EXPECT_EQ(r.multiplicity, 2);
      EXPECT_TRUE(r.is_exact());
      saw_exact = true;
      EXPECT_EQ(refine(r, power_of_two(-10)).lo, r.lo);
    } else {
      EXPECT_EQ(r.multiplicity, 1);
    }
  }
  EXPECT_TRUE(saw_exact);
}

TEST(Refine, SecondQRoot) {
  const auto roots = isolate_roots(closed_form::Q(3, 1), Rational(0), std::nullopt);
  const IsolatedRoot r = refine(roots[1], make_rational(1, 1000000000000L));
  EXPECT_LE(r.width(), make_rational(1, 1000000000000L));
  EXPECT_EQ(count_roots(r.poly, r.lo, r.hi), 1);
  EXPECT_NEAR(r.lo.get_d(), 0.5007654597, 1e-10);
}

TEST(Interval, Arithmetic) {
  const RatInterval a(Rational(1), Rational(2)), b(Rational(-1), Rational(3));
  EXPECT_EQ(a + b, RatInterval(Rational(0), Rational(5)));
  EXPECT_EQ(a * b, RatInterval(Rational(-2), Rational(6)));
  EXPECT_EQ(a - a, RatInterval(Rational(-1), Rational(1)));
  EXPECT_EQ(reciprocal(a), RatInterval(make_rational(1, 2), Rational(1)));
  EXPECT_THROW(reciprocal(b), DenominatorStraddlesZero);
  EXPECT_THROW(RatInterval(Rational(2), Rational(1)), std::invalid_argument);
  EXPECT_EQ(a.certified_sign(), 1);
  EXPECT_EQ(b.certified_sign(), 0);
  const RatInterval r = round_outward(RatInterval(make_rational(1, 3), make_rational(2, 3)), 4);
  EXPECT_EQ(r, RatInterval(make_rational(5, 16), make_rational(11, 16)));
}

TEST(Interval, RationalEvaluation) {
  EXPECT_EQ(interval_eval_rational(UniPoly({0, 1}), UniPoly::constant(1), RatInterval(Rational(1), Rational(2))),
            RatInterval(Rational(1), Rational(2)));
  EXPECT_THROW(interval_eval_rational(UniPoly::constant(1), UniPoly({0, 1}), RatInterval(Rational(-1), Rational(1))),
               DenominatorStraddlesZero);
  const auto roots = isolate_roots(closed_form::Q(3, 1), Rational(0), std::nullopt);
  const IsolatedRoot r = refine(roots[1], power_of_two(-60));
  const auto [x4n, x4d] = closed_form::x4_on_Q(3, 1);
  const auto [x2n, x2d] = closed_form::x2_on_Q(3, 1);
  const RatInterval x4 = interval_eval_rational(x4n, x4d, r.interval());
  const RatInterval x2 = interval_eval_rational(x2n, x2d, r.interval());
  EXPECT_EQ(x4.certified_sign(), 1);
  EXPECT_EQ(x2.certified_sign(), 1);
  EXPECT_NEAR(x4.midpoint().get_d(), 0.7237236345, 1e-9);
  EXPECT_NEAR(x2.midpoint().get_d(), 1.1686214533, 1e-9);
}

TEST(Interval, InclusionMonotone) {
  std::uniform_int_distribution<int> c(-5, 5);
  for (int t = 0; t < 50; ++t) {
    const UniPoly num({Rational(c(rng)), Rational(c(rng)), Rational(c(rng)), 1});
    const UniPoly den({Rational(3 + std::abs(c(rng))), Rational(c(rng) % 2), 1});  // positive on [0, 2]
    const RatInterval wide(Rational(0), Rational(2));
    const RatInterval narrow(make_rational(1, 2), make_rational(3, 2));
    const RatInterval a = interval_eval_rational(num, den, wide), b = interval_eval_rational(num, den, narrow);
    EXPECT_LE(a.lo(), b.lo());
    EXPECT_GE(a.hi(), b.hi());
    const Rational x = make_rational(5, 4);
    EXPECT_TRUE(b.contains(num(x) / den(x)));
  }
}
