#include <random>

#include <gtest/gtest.h>

#include "einflag/closed_forms.hpp"
#include "einflag/flagmodel.hpp"

using namespace einflag;

namespace {

std::mt19937 rng(99);

Metric4<Rational> random_metric() {
  std::uniform_int_distribution<int> num(1, 30), den(1, 7);
  auto r = [&] { return make_rational(num(rng), den(rng)); };
  return {r(), r(), r(), r()};
}

}  // namespace

TEST(FlagSpace, Construction) {
  const FlagSpace a = make_flag_space(3, 1);
  EXPECT_EQ(a.dims(), (std::array<long, 4>{4, 6, 4, 2}));
  EXPECT_EQ(a.c123, make_rational(3, 4));
  EXPECT_EQ(a.c134, make_rational(1, 2));
  const FlagSpace b = make_flag_space(4, 2);
  EXPECT_EQ(b.dims(), (std::array<long, 4>{8, 6, 8, 6}));
  EXPECT_EQ(b.c123, make_rational(6, 5));
  EXPECT_EQ(b.c134, make_rational(6, 5));
  EXPECT_THROW(make_flag_space(3, 3), InvalidParameters);
  EXPECT_THROW(make_flag_space(2, 1), InvalidParameters);
  EXPECT_THROW(make_flag_space(5, 0), InvalidParameters);
}

TEST(Ricci, KnownValues) {
  const FlagSpace s = make_flag_space(3, 1);
  const auto r = ricci_components(s, Metric4<Rational>{1, 1, 1, 1});
  EXPECT_EQ(r.r1, make_rational(11, 32));
  EXPECT_EQ(r.r2, make_rational(7, 16));
  EXPECT_EQ(r.r3, make_rational(11, 32));
  EXPECT_EQ(r.r4, make_rational(3, 8));
  const Metric4<Rational> g1{make_rational(3, 2), 5, make_rational(7, 2), 2};
  const auto e = ricci_components(s, g1);
  EXPECT_EQ(e.r1, e.r2);
  EXPECT_EQ(e.r1, e.r3);
  EXPECT_EQ(e.r1, e.r4);
}

TEST(Ricci, Homogeneity) {
  for (auto [n, p] : std::vector<std::pair<int, int>>{{3, 1}, {6, 4}}) {
    const FlagSpace s = make_flag_space(n, p);
    for (int t = 0; t < 20; ++t) {
      const auto g = random_metric();
      const Rational c = make_rational(1 + t, 3);
      const auto a = ricci_components(s, g);
      const auto b = ricci_components(s, Metric4<Rational>{c * g.x1, c * g.x2, c * g.x3, c * g.x4});
      EXPECT_EQ(b.r1 * c, a.r1);
      EXPECT_EQ(b.r2 * c, a.r2);
      EXPECT_EQ(b.r3 * c, a.r3);
      EXPECT_EQ(b.r4 * c, a.r4);
    }
  }
}

TEST(Ricci, GenericFormulaAgrees) {
  for (auto [n, p] : std::vector<std::pair<int, int>>{{3, 1}, {5, 2}, {7, 3}}) {
    const FlagSpace s = make_flag_space(n, p);
    const TripleTable t = flag_triple_table(s);
    for (int k = 0; k < 100; ++k) {
      const auto g = random_metric();
      const auto a = ricci_components(s, g);
      const auto b = ricci_generic(t, std::vector<Rational>{g.x1, g.x2, g.x3, g.x4});
      EXPECT_EQ(b, (std::vector<Rational>{a.r1, a.r2, a.r3, a.r4}));
    }
  }
}

TEST(Ricci, GenericSmallTables) {
  TripleTable zero({Rational(3), Rational(5), Rational(2)});
  EXPECT_EQ(ricci_generic(zero, std::vector<Rational>{1, 1, 1}), (std::vector<Rational>{make_rational(1, 2), make_rational(1, 2), make_rational(1, 2)}));
  TripleTable two({Rational(2), Rational(1)});
  two.set(1, 1, 2, make_rational(1, 2));
  EXPECT_EQ(two.get(2, 1, 1), make_rational(1, 2));
  // r1 = 1/2 + (1/8)(1) - (1/4)(1), r2 = 1/2 + (1/4)(1/2) - (1/2)(1/2)
  EXPECT_EQ(ricci_generic(two, std::vector<Rational>{1, 1}), (std::vector<Rational>{make_rational(3, 8), make_rational(3, 8)}));
}

TEST(Ricci, Duality) {
  for (auto [n, p] : std::vector<std::pair<int, int>>{{3, 1}, {7, 2}, {9, 5}}) {
    const FlagSpace a = make_flag_space(n, p), b = make_flag_space(n, n - p);
    for (int t = 0; t < 30; ++t) {
      const auto g = random_metric();
      const auto ra = ricci_components(a, g);
      const auto rb = ricci_components(b, Metric4<Rational>{g.x1, g.x4, g.x3, g.x2});
      EXPECT_EQ(ra.r2, rb.r4);
      EXPECT_EQ(ra.r4, rb.r2);
      EXPECT_EQ(ra.r1, rb.r1);
      EXPECT_EQ(ra.r3, rb.r3);
    }
  }
}

TEST(EinsteinSystem, DerivedMatchesDisplay) {
  for (int n = 3; n <= 9; ++n)
    for (int p = 1; p < n; ++p) {
      const auto sys = einstein_system(make_flag_space(n, p));
      for (int k = 0; k < 3; ++k) {
        EXPECT_TRUE(sys.display_ratio[k] != 0);
        EXPECT_TRUE(sys.homogeneous[k].homogeneous_degree().has_value());
      }
    }
}

TEST(EinsteinSystem, Values) {
  const FlagSpace s = make_flag_space(3, 1);
  const auto sys = einstein_system(s);
  const Poly4 x1_minus_x3 = Poly4::variable(0) - Poly4::variable(2);
  EXPECT_NO_THROW(exact_divide(sys.homogeneous[0], x1_minus_x3));
  const Metric4<Rational> ke{1, make_rational(10, 3), make_rational(7, 3), make_rational(4, 3)};
  EXPECT_EQ(einstein_residual(sys, ke), (std::array<Rational, 3>{0, 0, 0}));
  EXPECT_TRUE(is_einstein(sys, ke));
  EXPECT_FALSE(is_einstein(sys, Metric4<Rational>{1, 1, 1, 1}));
}

TEST(Kahler, ThreeOne) {
  const auto list = kahler_einstein_metrics(make_flag_space(3, 1));
  const std::vector<Metric4<Rational>> expected{{1, make_rational(2, 3), make_rational(1, 3), make_rational(4, 3)},
                                                {1, make_rational(10, 7), make_rational(3, 7), make_rational(4, 7)},
                                                {1, make_rational(10, 3), make_rational(7, 3), make_rational(4, 3)},
                                                {1, 2, 3, 4}};
  EXPECT_EQ(list, expected);
}

TEST(Kahler, SelfDual) {
  const FlagSpace s = make_flag_space(4, 2);
  const auto list = kahler_einstein_metrics(s);
  EXPECT_EQ(list.size(), 4u);
  const Metric4<Rational> g{1, make_rational(3, 2), make_rational(5, 2), make_rational(7, 2)};
  EXPECT_NE(std::find(list.begin(), list.end(), g), list.end());
  const auto sys = einstein_system(s);
  for (const auto& m : list) EXPECT_TRUE(is_einstein(sys, m));
}

TEST(EinsteinConstant, ValuesAndErrors) {
  const FlagSpace s = make_flag_space(3, 1);
  const Metric4<Rational> g{1, make_rational(10, 3), make_rational(7, 3), make_rational(4, 3)};
  const Rational e = einstein_constant(s, g);
  EXPECT_EQ(e, make_rational(3, 16));
  EXPECT_EQ(einstein_constant(s, Metric4<Rational>{2, 2 * g.x2, 2 * g.x3, 2 * g.x4}), e / 2);
  EXPECT_THROW(einstein_constant(s, Metric4<Rational>{1, 1, 1, 1}), NotEinstein);
}
