#include <random>

#include <gtest/gtest.h>

#include "einflag/closed_forms.hpp"
#include "einflag/resultant.hpp"
#include "einflag/sparse_poly.hpp"
#include "einflag/unipoly.hpp"

using namespace einflag;

namespace {

std::mt19937 rng(20240611);

Rational random_rational(int span = 9) {
  std::uniform_int_distribution<int> num(-span, span), den(1, 5);
  return make_rational(num(rng), den(rng));
}

UniPoly random_poly(int degree, const std::string& var = "x") {
  std::vector<Rational> c;
  for (int k = 0; k <= degree; ++k) c.push_back(random_rational());
  if (c.back() == 0) c.back() = 1;
  return UniPoly(c, var);
}

BiPoly random_bipoly(int dx, int dy) {
  BiPoly f;
  for (int i = 0; i <= dx; ++i)
    for (int j = 0; j <= dy; ++j) f += BiPoly::term(random_rational(), {i, j});
  f += BiPoly::term(Rational(1), {dx, dy});
  return f;
}

}  // namespace

TEST(Rational, LowestTermsAndPositiveDenominator) {
  const Rational q = make_rational(6, -4);
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  for (int t = 0; t < 200; ++t) {
    const Rational a = random_rational(), b = random_rational();
    const Rational direct = a + b;
    const Integer den = a.get_den() * b.get_den();
    const Rational common = make_rational(a.get_num() * b.get_den() + b.get_num() * a.get_den(), den);
    EXPECT_EQ(direct, common);
    EXPECT_GT(direct.get_den(), 0);
  }
}

TEST(Rational, DecimalAndSimplest) {
  EXPECT_EQ(to_decimal(make_rational(2, 3), 5), "0.66666");
  EXPECT_EQ(to_decimal(make_rational(-2, 3), 3), "-0.666");
  EXPECT_EQ(simplest_rational_between(make_rational(3, 10), make_rational(2, 5)), make_rational(1, 3));
  EXPECT_EQ(floor_of(make_rational(-7, 2)), -4);
  EXPECT_EQ(ceil_of(make_rational(-7, 2)), -3);
}

TEST(UniPoly, Evaluation) {
  const UniPoly f({-2, 0, 1});
  EXPECT_EQ(poly_eval(f, make_rational(3, 2)), make_rational(1, 4));
  const UniPoly q31 = closed_form::Q(3, 1);
  EXPECT_EQ(q31, UniPoly({117, -912, 1782, -912, 117}));
  EXPECT_EQ(poly_eval(q31, Rational(1)), 192);
  EXPECT_EQ(poly_eval(q31, Rational(1)), 32 * 2 * 3);
  for (int t = 0; t < 20; ++t) {
    const UniPoly g = random_poly(4);
    EXPECT_EQ(poly_eval(g, Rational(0)), g.coeff(0));
  }
}

TEST(UniPoly, Derivative) {
  EXPECT_EQ(derivative(UniPoly::monomial(1, 3)), UniPoly::monomial(3, 2));
  EXPECT_TRUE(derivative(UniPoly::constant(7)).is_zero());
  const UniPoly d = derivative(closed_form::f(3, 2));
  EXPECT_EQ(d.degree(), 3);
  EXPECT_EQ(d.leading(), 240);
}

TEST(UniPoly, Gcd) {
  EXPECT_EQ(poly_gcd(UniPoly({-1, 0, 1}), UniPoly({-1, 1})), UniPoly({-1, 1}));
  const UniPoly f({2, 4, 6});
  EXPECT_EQ(poly_gcd(f, UniPoly()), monic(f));
  const UniPoly q = closed_form::Q(3, 1);
  EXPECT_EQ(poly_gcd(q, derivative(q)), UniPoly::constant(1));
}

TEST(UniPoly, ExactDivide) {
  EXPECT_EQ(exact_divide(UniPoly({-1, 0, 1}), UniPoly({-1, 1})), UniPoly({1, 1}));
  EXPECT_THROW(exact_divide(UniPoly({1, 0, 1}), UniPoly({-1, 1})), NotDivisible);
  for (int t = 0; t < 50; ++t) {
    const UniPoly f = random_poly(t % 5), g = random_poly(1 + t % 4);
    EXPECT_EQ(exact_divide(f * g, g), f);
  }
}

TEST(UniPoly, SquareFreeAndContent) {
  const UniPoly a({-1, 1}), b({2, 1}), c({1, 0, 1});
  const UniPoly f = a * pow(b, 2) * pow(c, 3) * Rational(5);
  const auto parts = square_free_decomposition(f);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0], a);
  EXPECT_EQ(parts[1], b);
  EXPECT_EQ(parts[2], c);
  EXPECT_EQ(monic(square_free_part(f)), monic(a * b * c));
  EXPECT_EQ(primitive_part(UniPoly({make_rational(2, 3), 4})), UniPoly({1, 6}));
  EXPECT_EQ(scalar_ratio(UniPoly({2, 4}), UniPoly({1, 2})), Rational(2));
  EXPECT_FALSE(scalar_ratio(UniPoly({2, 4}), UniPoly({1, 3})).has_value());
  EXPECT_EQ(compose(UniPoly({0, 0, 1}), UniPoly({1, 1})), UniPoly({1, 2, 1}));
  EXPECT_TRUE(is_palindromic(closed_form::Q(5, 2)));
  EXPECT_FALSE(is_palindromic(UniPoly({1, 2, 3})));
}

TEST(SparsePoly, ArithmeticAndSubstitution) {
  const BiPoly::Names names{"x", "y"};
  const auto x = BiPoly::variable(0, names), y = BiPoly::variable(1, names);
  const BiPoly f = x * x * y - Rational(3) * y + Rational(1);
  EXPECT_EQ(f.degree_in(0), 2);
  EXPECT_EQ(f.degree_in(1), 1);
  EXPECT_EQ(f({Rational(2), Rational(5)}), 20 - 15 + 1);
  EXPECT_EQ(f.specialize(0, Rational(2)).as_univariate(1), UniPoly({1, 1}, "y"));
  // y = x/(x+1): (x^2 y - 3y + 1)(x+1) = x^3 - 3x + x + 1
  const BiPoly g = f.substitute_fraction(1, x, x + Rational(1));
  EXPECT_EQ(g.as_univariate(0), UniPoly({1, -2, 0, 1}, "x"));
  EXPECT_EQ(exact_divide(f * (x + y), x + y), f);
  EXPECT_THROW(exact_divide(f, x + y), NotDivisible);
  const BiPoly h = (Rational(1, 2) * x * y + Rational(1, 3) * x * x * y) * Rational(6);
  EXPECT_EQ(h.clear_denominators(), Rational(3) * BiPoly::constant(1, names) + Rational(2) * x);
}

TEST(Resultant, LinearCase) {
  for (int t = 0; t < 30; ++t) {
    const Rational a = random_rational(), b = random_rational();
    EXPECT_EQ(resultant(UniPoly({-a, 1}, "y"), UniPoly({-b, 1}, "y")), a - b);
  }
  EXPECT_EQ(resultant(UniPoly({-3, 1}), UniPoly({-5, 1})), -2);
}

TEST(Resultant, SwapSign) {
  for (int t = 0; t < 40; ++t) {
    const int df = 1 + t % 5, dg = 1 + (t / 5) % 5;
    const UniPoly f = random_poly(df), g = random_poly(dg);
    const Rational s = (df * dg) % 2 ? -1 : 1;
    EXPECT_EQ(resultant(g, f), s * resultant(f, g));
  }
}

TEST(Resultant, CommonRoot) {
  for (int t = 0; t < 30; ++t) {
    const Rational r = random_rational();
    const UniPoly lin({-r, 1});
    const UniPoly f = lin * random_poly(1 + t % 3), g = lin * random_poly(1 + t % 4);
    EXPECT_EQ(resultant(f, g), 0);
    EXPECT_EQ(poly_gcd(f, g)(r), 0);
  }
}

TEST(Resultant, SubresultantMatchesSylvester) {
  for (int df = 1; df <= 6; ++df)
    for (int dg = 1; dg <= 6; ++dg) {
      const UniPoly f = random_poly(df), g = random_poly(dg);
      const auto a = dense_coefficients(f), b = dense_coefficients(g);
      EXPECT_EQ(subresultant_resultant(a, b), sylvester_resultant(a, b)) << df << "," << dg;
    }
  for (int t = 0; t < 12; ++t) {
    const BiPoly f = random_bipoly(1 + t % 3, 1 + t % 4), g = random_bipoly(1 + (t + 1) % 3, 1 + (t + 2) % 3);
    EXPECT_EQ(resultant(f, g, "x2"), sylvester_resultant(f, g, "x2"));
    EXPECT_EQ(resultant(f, g, "x1"), sylvester_resultant(f, g, "x1"));
  }
}

TEST(Resultant, BareissAgainstLeibniz) {
  for (int t = 0; t < 20; ++t) {
    const int m = 1 + t % 5;
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m));
    for (auto& row : a)
      for (auto& v : row) v = random_rational(3);
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    Rational leibniz = 0;
    do {
      int inversions = 0;
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) inversions += perm[i] > perm[j];
      Rational prod = inversions % 2 ? -1 : 1;
      for (int i = 0; i < m; ++i) prod *= a[i][perm[i]];
      leibniz += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(bareiss_determinant(a), leibniz);
  }
}

TEST(Resultant, RejectsFreeVariable) {
  const BiPoly::Names names{"x3", "x4"};
  const auto x3 = BiPoly::variable(0, names), x4 = BiPoly::variable(1, names);
  EXPECT_THROW(resultant(x3 + Rational(1), x4 * x3, "x4"), std::invalid_argument);
  EXPECT_THROW(resultant(BiPoly(names), x4, "x4"), std::invalid_argument);
}

TEST(Resultant, PublishedFactorizationAtThreeOne) {
  const BiPoly F1 = closed_form::F1(3, 1), F2 = closed_form::F2(3, 1);
  UniPoly P = resultant(F1, F2, "x4");
  for (int k = 0; k < 4; ++k) P = exact_divide(P, UniPoly({1, 1}, "x3"));
  for (const auto& l : closed_form::P_linear_factors(3, 1)) P = exact_divide(P, l);
  EXPECT_EQ(P.degree(), 4);
  EXPECT_TRUE(scalar_ratio(P, closed_form::Q(3, 1)).has_value());
}

TEST(Resultant, SubcaseOneValue) {
  const Rational n = 3, p = 1;
  const auto sc = closed_form::subcases(n, p)[0];
  const UniPoly u1 = specialize_to_univariate(closed_form::F1(n, p), 0, sc.x3);
  const UniPoly u2 = specialize_to_univariate(closed_form::F2(n, p), 0, sc.x3);
  const UniPoly G = poly_gcd(u1, u2);
  const Rational r = resultant(with_leading(exact_divide(u1, G), sc.lead_first), with_leading(exact_divide(u2, G), sc.lead_second));
  const Rational expected = -8 * pow(n, 6) * pow(Rational(n + 1), 3) * (p + 1) * (n - 2 * p) * (n - p + 1) *
                            pow(Rational(n + p + 1), 4) * (n * n + 2 * n * p + 4 * n - 2 * p * p + 2);
  EXPECT_EQ(r, expected);
}

TEST(Resultant, FirstSubresultantDeterminesCommonRoot) {
  const UniPoly f = UniPoly({-2, 1}) * UniPoly({1, 0, 1}), g = UniPoly({-2, 1}) * UniPoly({3, 1});
  const auto s = subresultant_polynomial(dense_coefficients(f), dense_coefficients(g), 1);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(-s[0] / s[1], 2);
}
