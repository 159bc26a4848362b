#pragma once

// Published closed forms for Sp(n)/(U(p) x U(n-p)), transcribed term by term.
// The solver derives every object independently and only compares against
// these, so a transcription slip shows up as a FixtureMismatch rather than
// as a wrong answer. Known typesetting drops are repaired and marked.

#include <array>
#include <string>

#include "einflag/rational.hpp"
#include "einflag/sparse_poly.hpp"
#include "einflag/unipoly.hpp"

namespace einflag::closed_form {

inline UniPoly quartic(const Rational& a4, const Rational& a3, const Rational& a2, const Rational& a1,
                       const Rational& a0, std::string var) {
  return UniPoly(std::vector<Rational>{a0, a1, a2, a3, a4}, std::move(var));
}

// ---- Einstein system, homogeneous in x1..x4 --------------------------------

inline std::array<Poly4, 3> einstein_equations(const Rational& n, const Rational& p) {
  const auto x1 = Poly4::variable(0), x2 = Poly4::variable(1), x3 = Poly4::variable(2), x4 = Poly4::variable(3);
  Poly4 e13 = (x1 - x3) * (x1 * x2 + p * x1 * x2 + x2 * x3 + p * x2 * x3 + x1 * x4 + n * x1 * x4 - p * x1 * x4 -
                           Rational(2) * x2 * x4 - Rational(2 * n) * x2 * x4 + x3 * x4 + n * x3 * x4 - p * x3 * x4);
  Poly4 e12 = Rational(4 * (n + 1)) * x3 * x4 * (x2 - x1) + Rational(n + p + 1) * x4 * (x1 * x1 - x2 * x2) -
              Rational(n - 3 * p + 1) * x3 * x3 * x4 + Rational(p + 1) * x2 * (x1 * x1 - x3 * x3 - x4 * x4);
  Poly4 e34 = Rational(4 * (n + 1)) * x1 * x2 * (x4 - x3) + Rational(2 * n - p + 1) * x2 * (x3 * x3 - x4 * x4) +
              Rational(2 * n - 3 * p - 1) * x1 * x1 * x2 + Rational(n - p + 1) * x4 * (x3 * x3 - x1 * x1 - x2 * x2);
  return {e13, e12, e34};
}

// ---- Case x1 = x3 ----------------------------------------------------------

/// Equations in (x2, x4) after x1 = x3 = 1.
inline std::array<BiPoly, 2> case1_equations(const Rational& n, const Rational& p) {
  const BiPoly::Names names{"x2", "x4"};
  const auto x2 = BiPoly::variable(0, names), x4 = BiPoly::variable(1, names);
  BiPoly eq1 = Rational(n + p + 1) * x2 * x2 + BiPoly::constant(4 * (n - p + 1), names) - Rational(4 * (n + 1)) * x2 +
               Rational(p + 1) * x2 * x4;
  BiPoly eq2 = Rational(n - p + 1) * x2 * x4 + Rational(2 * n - p + 1) * x4 * x4 - Rational(4 * (n + 1)) * x4 +
               BiPoly::constant(4 * (p + 1), names);
  return {eq1, eq2};
}

inline UniPoly f(const Rational& n, const Rational& p) {
  return quartic(n * (n + 1) * (2 * n - p + 1), -4 * (n + 1) * (n * n + 2 * n * p + n - p * p + p),
                 2 * (n * n * n + 9 * n * n * p + 7 * n * n + 4 * n * p * p + 16 * n * p + 8 * n - 2 * p * p * p +
                      2 * p * p + 6 * p + 2),
                 -8 * (n + 1) * (p + 1) * (n + 3 * p + 1), 8 * (p + 1) * (p + 1) * (n + p + 1), "x4");
}

inline UniPoly g(const Rational& n, const Rational& p) {
  return quartic(n * (n + 1) * (n + p + 1), -4 * (n + 1) * (2 * n * n + 2 * n - p * p - p),
                 2 * (12 * n * n * n - 11 * n * n * p + 25 * n * n - 2 * n * p * p - 20 * n * p + 14 * n +
                      2 * p * p * p + 2 * p * p - 6 * p + 2),
                 -8 * (n + 1) * (4 * n - 3 * p + 1) * (n - p + 1),
                 8 * (n - p + 1) * (n - p + 1) * (2 * n - p + 1), "x2");
}

/// x2 from the second Case-1 equation: numerator and denominator in x4.
inline std::pair<UniPoly, UniPoly> case1_x2_of_x4(const Rational& n, const Rational& p) {
  return {UniPoly({-4 * (p + 1), 4 * (n + 1), -(2 * n - p + 1)}, "x4"), UniPoly({0, n - p + 1}, "x4")};
}

/// x4 from the first Case-1 equation: numerator and denominator in x2.
inline std::pair<UniPoly, UniPoly> case1_x4_of_x2(const Rational& n, const Rational& p) {
  return {UniPoly({-4 * (n - p + 1), 4 * (n + 1), -(n + p + 1)}, "x2"), UniPoly({0, p + 1}, "x2")};
}

inline Rational df_at_lower(const Rational& n, const Rational& p) {
  return -8 * (n - p + 1) *
         (2 * n * n * n - 3 * n * n * p + 13 * n * n - 8 * n * p + 16 * n + 2 * p * p * p - 6 * p + 4) / (n * n);
}

inline Rational df_at_lower_rewritten_factor(const Rational& n, const Rational& p) {
  const Rational m = n - p;
  return 2 * m * m * m + (3 * p + 13) * m * m + (18 * p + 16) * m + p * p * p + 5 * p * p + 10 * p + 4;
}

inline Rational df_at_upper(const Rational& n, const Rational& p) {
  return -8 * (p + 1) * (n - p + 1) * (n * n - 4 * n * p - 4 * n + 2 * p * p - 2 * p - 4) / (n * n);
}

/// Second derivative of f; the "+" before the constant term is restored.
inline UniPoly d2f(const Rational& n, const Rational& p) {
  return UniPoly({4 * (n * n * n + n * n * (9 * p + 7) + 4 * n * (p * p + 4 * p + 2) - 2 * (p + 1) * (p * p - 2 * p - 1)),
                  -24 * (n + 1) * (n * n + 2 * n * p + n - p * p + p), 12 * n * (n + 1) * (2 * n - p + 1)},
                 "x4");
}

/// (b/2)^2 - ac for d2f: the quarter discriminant.
inline Rational d2f_quarter_discriminant(const Rational& n, const Rational& p) {
  const Rational b2 = 12 * (n + 1) * (n * n + 2 * n * p + n - p * p + p);
  const Rational c = 4 * (n * n * n + n * n * (9 * p + 7) + 4 * n * (p * p + 4 * p + 2) - 2 * (p + 1) * (p * p - 2 * p - 1));
  return b2 * b2 - 12 * n * (n + 1) * (2 * n - p + 1) * c;
}

inline Rational h(const Rational& n, const Rational& p) {
  const Rational n2 = n * n, n3 = n2 * n, n4 = n3 * n, n5 = n4 * n;
  const Rational p2 = p * p, p3 = p2 * p, p4 = p3 * p;
  return n5 - 5 * n4 * p - 6 * n4 + 7 * n3 * p2 - 4 * n3 * p - 14 * n3 - 4 * n2 * p3 + 20 * n2 * p2 + 4 * n2 * p -
         9 * n2 + n * p4 - 14 * n * p3 + 13 * n * p2 + 2 * n * p - 2 * n + 3 * p4 - 6 * p3 + 3 * p2;
}

/// h as a polynomial in p for fixed n.
inline UniPoly h_in_p(const Rational& n) {
  return UniPoly({n * (n + 1) * (n * n * n - 7 * n * n - 7 * n - 2), -n * (5 * n * n * n + 4 * n * n - 4 * n - 2),
                  7 * n * n * n + 20 * n * n + 13 * n + 3, -2 * (n + 3) * (2 * n + 1), n + 3},
                 "p");
}

inline Rational h_at_half(const Rational& n) {
  return -n * (3 * n * n * n * n + 73 * n * n * n + 152 * n * n + 116 * n + 32) / 16;
}

inline Rational h_at_n_minus_1(const Rational& n) {
  return -2 * (n * n * n * n + 4 * n * n * n + 10 * n * n + 6 * n - 6);
}

inline Rational dh_at_two_thirds(const Rational& n) {
  return n * (5 * n * n * n + 204 * n * n + 360 * n + 162) / 27;
}

/// Tangent lines of f: (value at the contact point, slope, contact abscissa).
struct Line {
  Rational value;
  Rational slope;
  Rational at;
  Rational operator()(const Rational& t) const { return value + slope * (t - at); }
};

inline Line l1(const Rational& n, const Rational& p) {
  return {16 * (n - p + 1) * (n - p + 1) * (2 * n * n + 4 * n + p * p * p - p * p - p + 1) / (n * n * n),
          df_at_lower(n, p), 2 * (p - 1) / n};
}

inline Line l2(const Rational& n, const Rational& p) {
  return {16 * (p + 1) * (p + 1) * (p + 1) * (n - p + 1) * (n - p + 1) / (n * n * n), df_at_upper(n, p),
          2 * (p + 1) / n};
}

inline Line l3(const Rational& n, const Rational& p) {
  const Rational n2 = n * n, n3 = n2 * n, n4 = n3 * n;
  const Rational p2 = p * p, p3 = p2 * p, p4 = p3 * p, p5 = p4 * p;
  return {8 * (n4 - n3 * p + n3 + 2 * n2 * p3 - 2 * n2 * p - 4 * n * p4 + 2 * n * p3 + 2 * n * p2 + 2 * p5 - 2 * p4) / n3,
          -8 * (n - p + 1) * (n3 - n2 * p + n2 - 2 * n * p2 - 2 * n * p + 2 * p3) / n2, 2 * p / n};
}

inline Rational tangent_denominator_1(const Rational& n, const Rational& p) {
  const Rational m = n - p;
  return m * m * m + p * m * m + (p * p + 6 * p + 4) * m + (p + 2) * (p * p + 4 * p + 2);
}

inline Rational tangent_denominator_2(const Rational& n, const Rational& p) {
  const Rational m = n - p;
  return m * m * m + (p + 12) * m * m + (p * p + 18 * p + 16) * m + (p + 2) * (p * p + 4 * p + 2);
}

inline Rational alpha1(const Rational& n, const Rational& p) {
  const Rational m = n - p, p2 = p * p, p3 = p2 * p, p4 = p3 * p;
  const Rational num = (2 * p2 + 3 * p - 1) * m * m * m + (2 * p3 + 15 * p2 + 13 * p + 4) * m * m +
                       (2 * p4 + 15 * p3 + 39 * p2 + 36 * p + 12) * m + (2 * p + 1) * m * m * m * m + 2 * p4 +
                       13 * p3 + 28 * p2 + 22 * p + 6;
  return num / (n * (n - p + 1) * tangent_denominator_1(n, p));
}

inline Rational beta1(const Rational& n, const Rational& p) {
  const Rational n2 = n * n, n3 = n2 * n, n4 = n3 * n, n5 = n4 * n, n6 = n5 * n;
  const Rational p2 = p * p, p3 = p2 * p, p4 = p3 * p, p5 = p4 * p, p6 = p5 * p;
  const Rational num = n6 + 2 * n5 * p2 - 3 * n5 * p + n5 - 8 * n4 * p3 + 6 * n4 * p2 - 2 * n4 * p - 8 * n4 +
                       14 * n3 * p4 + 4 * n3 * p3 + 18 * n3 * p2 + 14 * n3 * p - 14 * n3 - 12 * n2 * p5 -
                       16 * n2 * p4 - 4 * n2 * p3 + 28 * n2 * p2 + 26 * n2 * p - 6 * n2 + 4 * n * p6 + 8 * n * p5 -
                       24 * n * p4 - 28 * n * p3 + 12 * n * p2 + 12 * n * p + 12 * p5 - 12 * p3;
  return 8 * (p + 1) * num / (n3 * tangent_denominator_1(n, p));
}

inline Rational beta1_rewritten(const Rational& n, const Rational& p) {
  const Rational m = n - p, p2 = p * p, p3 = p2 * p, p4 = p3 * p, p5 = p4 * p;
  Rational mk[7];
  mk[0] = 1;
  for (int k = 1; k < 7; ++k) mk[k] = mk[k - 1] * m;
  const Rational num = mk[6] + (2 * p2 + 3 * p + 1) * mk[5] + (2 * p3 + 6 * p2 + 3 * p - 8) * mk[4] +
                       (2 * p4 + 18 * p3 + 20 * p2 - 18 * p - 14) * mk[3] +
                       (2 * p5 + 17 * p4 + 48 * p3 + 22 * p2 - 16 * p - 6) * mk[2] +
                       (3 * p5 + 19 * p4 + 38 * p3 + 22 * p2) * m + p2 * (p3 + 6 * p2 + 12 * p + 6);
  return 8 * (p + 1) * num / (n * n * n * tangent_denominator_1(n, p));
}

inline Rational alpha2(const Rational& n, const Rational& p) {
  const Rational m = n - p, p2 = p * p, p3 = p2 * p, p4 = p3 * p;
  const Rational num = (2 * p - 1) * m * m * m * m + (2 * p2 + 25 * p - 15) * m * m * m +
                       (2 * p3 + 37 * p2 + 35 * p - 36) * m * m + (2 * p4 + 13 * p3 + 49 * p2 + 4 * p - 28) * m +
                       2 * p4 + 11 * p3 + 12 * p2 - 6 * p - 6;
  return num / (n * (n - p + 1) * tangent_denominator_2(n, p));
}

inline Rational beta2(const Rational& n, const Rational& p) {
  const Rational n2 = n * n, n3 = n2 * n, n4 = n3 * n, n5 = n4 * n, n6 = n5 * n, n7 = n6 * n;
  const Rational p2 = p * p, p3 = p2 * p, p4 = p3 * p, p5 = p4 * p, p6 = p5 * p, p7 = p6 * p;
  const Rational num =
      2 * n7 - 7 * n6 * p + 29 * n6 + 2 * n5 * p3 + 9 * n5 * p2 - 66 * n5 * p + 79 * n5 - 8 * n4 * p4 +
      26 * n4 * p3 + 28 * n4 * p2 - 178 * n4 * p + 84 * n4 + 14 * n3 * p5 - 78 * n3 * p4 + 106 * n3 * p3 +
      72 * n3 * p2 - 192 * n3 * p + 38 * n3 - 12 * n2 * p6 + 68 * n2 * p5 - 172 * n2 * p4 + 144 * n2 * p3 +
      82 * n2 * p2 - 84 * n2 * p + 6 * n2 + 4 * n * p7 - 20 * n * p6 + 88 * n * p5 - 148 * n * p4 + 64 * n * p3 +
      24 * n * p2 - 12 * n * p - 12 * p6 + 36 * p5 - 36 * p4 + 12 * p3;
  return 8 * num / (n3 * tangent_denominator_2(n, p));
}

inline Rational beta2_rewritten(const Rational& n, const Rational& p) {
  const Rational m = n - p, p2 = p * p, p3 = p2 * p, p4 = p3 * p, p5 = p4 * p, p6 = p5 * p;
  const Rational q = p - 1, q2 = q * q, q3 = q2 * q, q4 = q3 * q;
  Rational mk[8];
  mk[0] = 1;
  for (int k = 1; k < 8; ++k) mk[k] = mk[k - 1] * m;
  const Rational num = 2 * mk[7] + (7 * p + 29) * mk[6] + (2 * p3 + 9 * p2 + 108 * p + 79) * mk[5] +
                       (2 * p4 + 36 * p3 + 133 * p2 + 217 * p + 84) * mk[4] +
                       (2 * p5 + 46 * p4 + 138 * p3 + 150 * p2 + 144 * p + 38) * mk[3] +
                       (2 * p6 + 17 * p5 + 89 * p4 + 82 * p3 + 10 * p2 + 30 * p + 6) * mk[2] +
                       3 * (q4 + 10 * q3 + 37 * q2 + 44 * q + 6) * p2 * m +
                       (q4 + 9 * q3 + 23 * q2 + 13 * q - 8) * p2;
  return 8 * num / (n * n * n * tangent_denominator_2(n, p));
}

// ---- Case x1 != x3 ---------------------------------------------------------

/// x2 = num / den with num, den in (x3, x4) (BiPoly variable order x3, x4).
inline std::pair<BiPoly, BiPoly> x2_relation(const Rational& n, const Rational& p) {
  const BiPoly::Names names{"x3", "x4"};
  const auto x3 = BiPoly::variable(0, names), x4 = BiPoly::variable(1, names);
  const auto one = BiPoly::constant(1, names);
  return {(x3 + one) * x4 * Rational(n - p + 1), Rational(2 * (n + 1)) * x4 - Rational(p + 1) * (x3 + one)};
}

inline BiPoly F1(const Rational& n, const Rational& p) {
  const BiPoly::Names names{"x3", "x4"};
  const auto x3 = BiPoly::variable(0, names), x4 = BiPoly::variable(1, names);
  const auto one = BiPoly::constant(1, names);
  const Rational A = 3 * n * n * n + 5 * n * n * p + 9 * n * n + 2 * n * p * p + 12 * n * p + 10 * n - 2 * p * p * p + 6 * p + 4;
  const Rational B = 5 * n * n * n + 3 * n * n * p + 15 * n * n - 2 * n * p * p + 4 * n * p + 14 * n + 2 * p * p * p + 2 * p + 4;
  return -A * x3 * x3 * x4 * x4 + 2 * B * x3 * x4 * x4 - A * x4 * x4 +
         Rational(2 * (n + 1) * (p + 1) * (n + 3 * p + 1)) * x3 * x3 * x3 * x4 +
         Rational(4 * (p + 1) * (p + 1) * (n - p + 1)) * x3 * x3 * x3 -
         Rational(2 * (n + 1) * (p + 1) * (5 * n - p + 5)) * x3 * x3 * x4 +
         Rational(4 * (p + 1) * (p + 1) * (2 * n - p + 2)) * x3 * x3 +
         Rational(2 * (n + 1) * (p + 1) * (n - p + 1)) * x3 * x4 * x4 * x4 -
         Rational(2 * (n + 1) * (p + 1) * (5 * n - p + 5)) * x3 * x4 +
         Rational(4 * (p + 1) * (p + 1) * (n - p + 1)) * x3 +
         Rational(2 * (n + 1) * (p + 1) * (n - p + 1)) * x4 * x4 * x4 +
         Rational(2 * (n + 1) * (p + 1) * (n + 3 * p + 1)) * x4 -
         Rational(2 * p * (p + 1) * (p + 1)) * x3 * x3 * x3 * x3 - one * Rational(2 * p * (p + 1) * (p + 1));
}

inline BiPoly F2(const Rational& n, const Rational& p) {
  const BiPoly::Names names{"x3", "x4"};
  const auto x3 = BiPoly::variable(0, names), x4 = BiPoly::variable(1, names);
  const auto one = BiPoly::constant(1, names);
  const Rational C = 3 * n * n + 4 * n * p + 8 * n - 2 * p * p + 2 * p + 4;
  return Rational(2 * (p + 1) * (n - p)) * x3 * x3 * x3 - Rational(2 * (n + 1) * (2 * n - 3 * p - 1)) * x3 * x3 * x4 -
         C * x4 * x4 - C * x3 * x4 * x4 - Rational(2 * (p + 1) * (n + p + 2)) * x3 * x3 +
         Rational(4 * (n + 1) * (2 * n + p + 3)) * x3 * x4 - Rational(2 * (p + 1) * (n + p + 2)) * x3 +
         Rational(2 * (n + 1) * (2 * n - p + 1)) * x4 * x4 * x4 - Rational(2 * (n + 1) * (2 * n - 3 * p - 1)) * x4 +
         one * Rational(2 * (p + 1) * (n - p));
}

/// The degree-4 factor of Res_x4(F1, F2); the "+" before the x^2 term is restored.
inline UniPoly Q(const Rational& n, const Rational& p) {
  const Rational a = n * n * (3 * n + 4);
  const Rational b = -8 * n * (2 * n * n + n * p + 5 * n - p * p + 3);
  const Rational c = 2 * (13 * n * n * n + 8 * n * n * p + 36 * n * n - 8 * n * p * p + 16 * n * p + 40 * n - 16 * p * p + 16);
  return quartic(a, b, c, b, a, "x3");
}

/// Scalar and linear factors accompanying Q in Res_x4(F1, F2).
inline Rational P_scalar(const Rational& n, const Rational& p) {
  return -16 * pow(Rational(n + 1), 4) * (p + 1) * (p + 1) * (n - p + 1) * (n - p + 1);
}

inline std::array<UniPoly, 4> P_linear_factors(const Rational& n, const Rational& p) {
  return {UniPoly({-n - 2 * p - 2, n}, "x3"), UniPoly({-3 * n + 2 * p - 2, n}, "x3"),
          UniPoly({-n, 3 * n - 2 * p + 2}, "x3"), UniPoly({-n, n + 2 * p + 2}, "x3")};
}

inline Rational Q_at_half(const Rational& n, const Rational& p) {
  return (-5 * n * n * n - 16 * n * n * p - 44 * n * n + 16 * n * p * p + 128 * n * p + 80 * n - 128 * p * p + 128) / 16;
}

/// Two shifted expansions of 16 Q(1/2).
inline std::array<Rational, 2> Q_at_half_rewritten(const Rational& n, const Rational& p) {
  const Rational m = n - p - 1, p2 = p * p, p3 = p2 * p, q = p - 2;
  const Rational head = -5 * m * m * m + (-31 * p - 59) * m * m + (-31 * p2 - 22 * p - 23) * m;
  return {head - 5 * p3 - 75 * p2 + 89 * p + 159, head - 5 * q * q * q - 105 * q * q - 271 * q - 3};
}

inline Rational Q1_at_half(const Rational& n) { return -n * (5 * n * n + 60 * n - 224) / 16; }

/// x4 = num/den in x3 on the roots of Q.
inline std::pair<UniPoly, UniPoly> x4_on_Q(const Rational& n, const Rational& p) {
  return {UniPoly({-n, 2 * (n + 2 * p + 2), -n}, "x3"), UniPoly({n, n}, "x3")};
}

/// x2 = num/den in x3 on the roots of Q.
inline std::pair<UniPoly, UniPoly> x2_on_Q(const Rational& n, const Rational& p) {
  const UniPoly quad({-n, 2 * (n + 2 * p + 2), -n}, "x3");
  const UniPoly num = UniPoly({1, 1}, "x3") * quad * Rational(-n + p - 1);
  const UniPoly den({n * (2 * n + p + 3), -2 * (2 * n * n + 3 * n * p + 5 * n + 4 * p + 4), n * (2 * n + p + 3)}, "x3");
  return {num, den};
}

/// Linear-in-x4 relation on the roots of Q, constant term n included; variables (x3, x4).
inline BiPoly x4_relation_polynomial(const Rational& n, const Rational& p) {
  const BiPoly::Names names{"x3", "x4"};
  const auto x3 = BiPoly::variable(0, names), x4 = BiPoly::variable(1, names);
  const auto one = BiPoly::constant(1, names);
  return n * x3 * x3 - Rational(2 * (n + 2 * p + 2)) * x3 + n * one + n * (x3 + one) * x4;
}

/// The same relation with the constant term n dropped.
inline BiPoly x4_relation_without_constant(const Rational& n, const Rational& p) {
  const BiPoly::Names names{"x3", "x4"};
  const auto x3 = BiPoly::variable(0, names), x4 = BiPoly::variable(1, names);
  const auto one = BiPoly::constant(1, names);
  return n * x3 * x3 - Rational(2 * (n + 2 * p + 2)) * x3 + n * (x3 + one) * x4;
}

/// P_{n,p}(x2, x3) built from x2_on_Q; variables (x3, x2).
inline BiPoly x2_relation_polynomial(const Rational& n, const Rational& p) {
  const BiPoly::Names names{"x3", "x2"};
  const auto x3 = BiPoly::variable(0, names), x2 = BiPoly::variable(1, names);
  const auto one = BiPoly::constant(1, names);
  const BiPoly den = n * (2 * n + p + 3) * x3 * x3 - Rational(2 * (2 * n * n + 3 * n * p + 5 * n + 4 * p + 4)) * x3 +
                     one * Rational(n * (2 * n + p + 3));
  const BiPoly quad = -n * x3 * x3 + Rational(2 * (n + 2 * p + 2)) * x3 - n * one;
  return x2 * den - (x3 + one) * Rational(-n + p - 1) * quad;
}

inline UniPoly S(const Rational& n, const Rational& p) {
  const Rational n2 = n * n, n3 = n2 * n, n4 = n3 * n, n5 = n4 * n;
  const Rational p2 = p * p, p3 = p2 * p, p4 = p3 * p;
  return quartic(n2 * (n + 1) * (3 * n + 4) * (2 * n - p + 1),
                 4 * n * (n + 1) * (2 * n - p + 1) * (n2 - 4 * n * p - 2 * p2 - 8 * p - 2),
                 2 * (n5 - 19 * n4 * p - 11 * n4 + 36 * n3 * p2 - 18 * n3 * p - 30 * n3 + 22 * n2 * p3 +
                      130 * n2 * p2 + 54 * n2 * p - 22 * n2 - 16 * n * p4 + 4 * n * p3 + 108 * n * p2 + 68 * n * p -
                      4 * n - 16 * p4 - 16 * p3 + 16 * p2 + 16 * p),
                 -8 * (p + 1) * (n - 2 * p) * (n + p + 1) * (n2 - 6 * n * p - 2 * n + 2 * p2 - 4 * p - 2),
                 8 * (p + 1) * (p + 1) * (n - 2 * p) * (n - 2 * p) * (n + p + 1), "x4");
}

inline Rational S_scalar(const Rational& n, const Rational& p) { return 32 * pow(n, 4) * (n + p + 1); }

inline UniPoly T(const Rational& n, const Rational& p) {
  const Rational n2 = n * n, n3 = n2 * n, n4 = n3 * n, n5 = n4 * n;
  const Rational p2 = p * p, p3 = p2 * p, p4 = p3 * p;
  return quartic(n2 * (n + 1) * (3 * n + 4) * (n + p + 1),
                 -4 * n * (n + 1) * (n + p + 1) * (5 * n2 - 8 * n * p + 8 * n + 2 * p2 - 8 * p + 2),
                 2 * (24 * n5 - 55 * n4 * p + 89 * n4 + 6 * n3 * p2 - 190 * n3 * p + 116 * n3 + 42 * n2 * p3 +
                      46 * n2 * p2 - 222 * n2 * p + 62 * n2 - 16 * n * p4 + 60 * n * p3 + 60 * n * p2 - 100 * n * p +
                      12 * n - 16 * p4 + 16 * p3 + 16 * p2 - 16 * p),
                 -8 * (n - 2 * p) * (n - p + 1) * (2 * n - p + 1) * (3 * n2 - 2 * n * p + 6 * n - 2 * p2 - 4 * p + 2),
                 8 * (n - 2 * p) * (n - 2 * p) * (n - p + 1) * (n - p + 1) * (2 * n - p + 1), "x2");
}

inline Rational T_scalar(const Rational& n, const Rational& p) {
  return 1024 * pow(n, 4) * (n + 1) * (n - p + 1) * (n - p + 1) * (p + 1) * (p + 1) * pow(Rational(n + p + 1), 3);
}

inline Rational S_at_zero(const Rational& n, const Rational& p) {
  return 8 * (p + 1) * (p + 1) * (n - 2 * p) * (n - 2 * p) * (n + p + 1);
}

inline Rational S_at_upper(const Rational& n, const Rational& p) {
  return -16 * (p + 1) * (p + 1) * (n - p + 1) * (n - p + 1) * (n * (p - 1) + 4 * p * p + 4 * p) / (n * n);
}

inline Rational S_at_double_gap(const Rational& n, const Rational& p) {
  return 8 * (n - 2 * p) * (n - 2 * p) * (n - p + 1) * (n - p + 1) * (5 * n * n - 9 * n * p + 3 * n + 4 * p * p - 4 * p) / n;
}

inline Rational S_at_gap(const Rational& n, const Rational& p) {
  const Rational n2 = n * n, n3 = n2 * n, n4 = n3 * n;
  const Rational p2 = p * p, p3 = p2 * p, p4 = p3 * p;
  return -(n - 2 * p) * (n - 2 * p) / n2 *
         (5 * n4 * p + 9 * n4 - 4 * n3 * p2 + 3 * n3 * p + 33 * n3 + 4 * n2 * p2 - 20 * n2 * p + 40 * n2 -
          20 * n * p3 + 4 * n * p2 - 32 * n * p + 16 * n + 16 * p4 - 16 * p);
}

inline Rational S_at_gap_rewritten(const Rational& n, const Rational& p) {
  const Rational m = n - p, p2 = p * p, p3 = p2 * p, p4 = p3 * p, p5 = p4 * p;
  return -(n - 2 * p) * (n - 2 * p) / (n * n) *
         ((16 * p2 + 39 * p + 33) * m * m * m + (18 * p3 + 67 * p2 + 79 * p + 40) * m * m +
          (8 * p4 + 33 * p3 + 63 * p2 + 48 * p + 16) * m + (5 * p + 9) * m * m * m * m + p5 + 12 * p4 + 17 * p3 +
          8 * p2);
}

// ---- Sub-case (a) ----------------------------------------------------------

struct SubcaseA {
  Rational x3;
  UniPoly spurious_factor;  // the x4-linear factor common to both specialized equations
  Rational lead_first;      // leading coefficient of the reduced F1
  Rational lead_second;     // leading coefficient of the reduced F2
  Rational resultant;       // reference value of the resultant of the reduced pair
};

inline std::array<SubcaseA, 4> subcases(const Rational& n, const Rational& p) {
  const Rational k = n * n + 2 * n * p + 4 * n - 2 * p * p + 2;
  const Rational c1 = pow(Rational(n + 1), 3) * (p + 1) * (n - 2 * p) * (n - p + 1) * k;
  const Rational a = n + 2 * p + 2, b = 3 * n - 2 * p + 2;
  return {SubcaseA{a / n, UniPoly({-2 * p - 2, n}, "x4"), n * n * (n + 1) * (p + 1) * (n - p + 1),
                   n * n * (n + 1) * (2 * n - p + 1), -8 * pow(n, 6) * c1 * pow(Rational(n + p + 1), 4)},
          SubcaseA{b / n, UniPoly({-4 * n + 2 * p - 2, n}, "x4"), n * n * (n + 1) * (2 * n - p + 1), n * n * (n + 1),
                   8 * pow(n, 6) * c1},
          SubcaseA{n / a, UniPoly({-2 * (p + 1), a}, "x4"), (n - p + 1) * (n + 1) * (p + 1) * a * a,
                   (n + 1) * (2 * n - p + 1) * a * a, -8 * n * n * c1 * pow(Rational(n + p + 1), 4) * pow(a, 4)},
          SubcaseA{n / b, UniPoly({-2 * (2 * n - p + 1), b}, "x4"), (n + 1) * b * b * (2 * n - p + 1), (n + 1) * b * b,
                   8 * n * n * c1 * pow(b, 4)}};
}

// ---- Kahler-Einstein metrics (unnormalized) ---------------------------------

inline std::array<Rational, 4> kahler_g1(const Rational& n, const Rational& p) {
  return {n / 2, n + p + 1, n / 2 + p + 1, p + 1};
}

inline std::array<Rational, 4> kahler_g2(const Rational& n, const Rational& p) {
  return {n / 2, n - p + 1, 3 * n / 2 - p + 1, 2 * n - p + 1};
}

/// The metric for n = 2p.
inline std::array<Rational, 4> kahler_self_dual(const Rational& p) { return {p, p + 1, 2 * p + 1, 3 * p + 1}; }

}  // namespace einflag::closed_form
