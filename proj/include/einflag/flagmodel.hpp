#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "einflag/closed_forms.hpp"
#include "einflag/errors.hpp"
#include "einflag/interval.hpp"
#include "einflag/rational.hpp"
#include "einflag/sparse_poly.hpp"

namespace einflag {

/// Sp(n)/(U(p) x U(n-p)): isotropy dimensions and the two nonzero
/// structure constants [123] and [134].
struct FlagSpace {
  int n = 0;
  int p = 0;
  Rational d1, d2, d3, d4;
  Rational c123, c134;

  Rational nq() const { return Rational(n); }
  Rational pq() const { return Rational(p); }
  bool self_dual() const { return n == 2 * p; }
  std::array<long, 4> dims() const { return {d1.get_num().get_si(), d2.get_num().get_si(), d3.get_num().get_si(), d4.get_num().get_si()}; }
};

inline FlagSpace make_flag_space(int n, int p) {
  if (n < 3 || p < 1 || p > n - 1) {
    throw InvalidParameters("need n >= 3 and 1 <= p <= n-1, got n=" + std::to_string(n) + ", p=" + std::to_string(p));
  }
  FlagSpace s;
  s.n = n;
  s.p = p;
  const Rational N(n), P(p);
  s.d1 = 2 * P * (N - P);
  s.d2 = (N - P) * (N - P + 1);
  s.d3 = 2 * P * (N - P);
  s.d4 = P * (P + 1);
  s.c123 = P * (N - P) * (N - P + 1) / (2 * (N + 1));
  s.c134 = P * (P + 1) * (N - P) / (2 * (N + 1));
  return s;
}

/// Invariant metric (x1, x2, x3, x4).
template <class T>
struct Metric4 {
  T x1, x2, x3, x4;

  std::array<T, 4> as_array() const { return {x1, x2, x3, x4}; }
  friend bool operator==(const Metric4& a, const Metric4& b) {
    return a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3 && a.x4 == b.x4;
  }
};

template <class T>
struct RicciComponents {
  T r1, r2, r3, r4;
  std::array<T, 4> as_array() const { return {r1, r2, r3, r4}; }
};

/// How a scalar type is built from a Rational and inverted.
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static Rational lift(const Rational& q) { return q; }
  static Rational inv(const Rational& x) { return 1 / x; }
};

template <>
struct scalar_traits<double> {
  static double lift(const Rational& q) { return q.get_d(); }
  static double inv(double x) { return 1.0 / x; }
};

template <>
struct scalar_traits<RatInterval> {
  static RatInterval lift(const Rational& q) { return RatInterval(q); }
  static RatInterval inv(const RatInterval& x) { return reciprocal(x); }
};

template <std::size_t N>
struct scalar_traits<SparsePoly<N>> {
  static SparsePoly<N> lift(const Rational& q) { return SparsePoly<N>::constant(q); }
  /// Only monomials can be inverted.
  static SparsePoly<N> inv(const SparsePoly<N>& x) {
    if (x.size() != 1) throw std::domain_error("inverse of a non-monomial");
    typename SparsePoly<N>::Exponent e = x.terms().begin()->first;
    const Rational& c = x.terms().begin()->second;
    for (auto& k : e) k = -k;
    return SparsePoly<N>::term(1 / c, e, x.vars());
  }
};

/**
 * Ricci components of the invariant metric g:
 *   r1 = 1/(2x1) + c123/(2d1)(x1/(x2x3) - x2/(x1x3) - x3/(x1x2)) + c134/(2d1)(x1/(x3x4) - x4/(x1x3) - x3/(x1x4))
 *   r2 = 1/(2x2) + c123/(2d2)(x2/(x1x3) - x1/(x2x3) - x3/(x1x2))
 *   r3 = 1/(2x3) + c123/(2d3)(x3/(x1x2) - x2/(x1x3) - x1/(x2x3)) + c134/(2d3)(x3/(x1x4) - x4/(x1x3) - x1/(x3x4))
 *   r4 = 1/(2x4) + c134/(2d4)(x4/(x1x3) - x3/(x1x4) - x1/(x3x4))
 */
template <class T>
RicciComponents<T> ricci_components(const FlagSpace& s, const Metric4<T>& g) {
  using tr = scalar_traits<T>;
  const T i1 = tr::inv(g.x1), i2 = tr::inv(g.x2), i3 = tr::inv(g.x3), i4 = tr::inv(g.x4);
  const T half = tr::lift(Rational(1, 2));
  auto k = [](const Rational& c, const Rational& d) { return tr::lift(c / (2 * d)); };
  const T a1 = g.x1 * i2 * i3 - g.x2 * i1 * i3 - g.x3 * i1 * i2;
  const T b1 = g.x1 * i3 * i4 - g.x4 * i1 * i3 - g.x3 * i1 * i4;
  const T a2 = g.x2 * i1 * i3 - g.x1 * i2 * i3 - g.x3 * i1 * i2;
  const T a3 = g.x3 * i1 * i2 - g.x2 * i1 * i3 - g.x1 * i2 * i3;
  const T b3 = g.x3 * i1 * i4 - g.x4 * i1 * i3 - g.x1 * i3 * i4;
  const T b4 = g.x4 * i1 * i3 - g.x3 * i1 * i4 - g.x1 * i3 * i4;
  return {half * i1 + k(s.c123, s.d1) * a1 + k(s.c134, s.d1) * b1, half * i2 + k(s.c123, s.d2) * a2,
          half * i3 + k(s.c123, s.d3) * a3 + k(s.c134, s.d3) * b3, half * i4 + k(s.c134, s.d4) * b4};
}

/// Summand dimensions and the fully symmetric triples [ijk] (1-based).
class TripleTable {
 public:
  explicit TripleTable(std::vector<Rational> dims) : dims_(std::move(dims)) {}

  std::size_t size() const { return dims_.size(); }
  const Rational& dim(std::size_t k) const { return dims_.at(k - 1); }

  void set(int i, int j, int k, const Rational& v) { triples_[key(i, j, k)] = v; }

  Rational get(int i, int j, int k) const {
    auto it = triples_.find(key(i, j, k));
    return it == triples_.end() ? Rational(0) : it->second;
  }

 private:
  static std::array<int, 3> key(int i, int j, int k) {
    std::array<int, 3> a{i, j, k};
    std::sort(a.begin(), a.end());
    return a;
  }
  std::vector<Rational> dims_;
  std::map<std::array<int, 3>, Rational> triples_;
};

inline TripleTable flag_triple_table(const FlagSpace& s) {
  TripleTable t({s.d1, s.d2, s.d3, s.d4});
  t.set(1, 2, 3, s.c123);
  t.set(1, 3, 4, s.c134);
  return t;
}

/// r_k = 1/(2x_k) + 1/(4d_k) sum_{i,j} x_k/(x_i x_j)[ijk] - 1/(2d_k) sum_{i,j} x_j/(x_k x_i)[kij]
template <class T>
std::vector<T> ricci_generic(const TripleTable& table, const std::vector<T>& x) {
  using tr = scalar_traits<T>;
  const int s = static_cast<int>(table.size());
  if (static_cast<int>(x.size()) != s) throw std::invalid_argument("ricci_generic: dimension mismatch");
  std::vector<T> inv;
  for (const auto& xi : x) inv.push_back(tr::inv(xi));
  std::vector<T> r;
  for (int k = 1; k <= s; ++k) {
    const Rational& dk = table.dim(static_cast<std::size_t>(k));
    T acc = tr::lift(Rational(1, 2)) * inv[k - 1];
    for (int i = 1; i <= s; ++i) {
      for (int j = 1; j <= s; ++j) {
        const Rational ijk = table.get(i, j, k);
        if (ijk == 0) continue;
        acc = acc + tr::lift(ijk / (4 * dk)) * x[k - 1] * inv[i - 1] * inv[j - 1];
        acc = acc - tr::lift(ijk / (2 * dk)) * x[j - 1] * inv[k - 1] * inv[i - 1];
      }
    }
    r.push_back(acc);
  }
  return r;
}

/// The Einstein equations r1 - r3, r1 - r2, r3 - r4 as integer polynomials
/// in x1..x4, plus their x1 = 1 specializations.
struct EinsteinSystem {
  std::array<Poly4, 3> homogeneous;
  std::array<Poly4, 3> normalized;
  /// homogeneous[k] == display_ratio[k] * the closed form.
  std::array<Rational, 3> display_ratio;
};

inline EinsteinSystem einstein_system(const FlagSpace& s) {
  const Metric4<Poly4> g{Poly4::variable(0), Poly4::variable(1), Poly4::variable(2), Poly4::variable(3)};
  const auto r = ricci_components(s, g);
  EinsteinSystem sys;
  sys.homogeneous = {(r.r1 - r.r3).clear_denominators(), (r.r1 - r.r2).clear_denominators(),
                     (r.r3 - r.r4).clear_denominators()};
  const auto display = closed_form::einstein_equations(s.nq(), s.pq());
  static const char* names[3] = {"r1-r3", "r1-r2", "r3-r4"};
  for (int k = 0; k < 3; ++k) {
    if (!sys.homogeneous[k].homogeneous_degree()) {
      throw CertificationError(std::string("Einstein equation ") + names[k] + " is not homogeneous");
    }
    const auto ratio = scalar_ratio(sys.homogeneous[k], display[k]);
    if (!ratio) throw FixtureMismatch(std::string("Einstein equation ") + names[k] + " differs from the closed form");
    sys.display_ratio[k] = *ratio;
    sys.normalized[k] = sys.homogeneous[k].specialize(0, Rational(1));
  }
  return sys;
}

inline std::array<Rational, 3> einstein_residual(const EinsteinSystem& sys, const Metric4<Rational>& g) {
  const std::array<Rational, 4> x = g.as_array();
  return {sys.homogeneous[0](x), sys.homogeneous[1](x), sys.homogeneous[2](x)};
}

inline bool is_einstein(const EinsteinSystem& sys, const Metric4<Rational>& g) {
  const auto r = einstein_residual(sys, g);
  return r[0] == 0 && r[1] == 0 && r[2] == 0;
}

inline Metric4<Rational> normalize(const std::array<Rational, 4>& x) {
  return {Rational(1), x[1] / x[0], x[2] / x[0], x[3] / x[0]};
}

/// Lexicographic order on (x3, x4, x2).
template <class T>
bool canonical_less(const Metric4<T>& a, const Metric4<T>& b) {
  return std::tie(a.x3, a.x4, a.x2) < std::tie(b.x3, b.x4, b.x2);
}

/**
 * Normalized (x1 = 1) Kahler-Einstein tuples: the metrics of the invariant
 * complex structures and their m1 <-> m3 relabelings. Four tuples for every
 * (n, p); each is checked against the Einstein system exactly.
 */
inline std::vector<Metric4<Rational>> kahler_einstein_metrics(const FlagSpace& s, const EinsteinSystem& sys) {
  const Rational n = s.nq(), p = s.pq();
  std::vector<std::array<Rational, 4>> raw;
  if (s.self_dual()) {
    const auto g = closed_form::kahler_self_dual(p);
    raw = {g, {g[0], g[3], g[2], g[1]}};
  } else {
    raw = {closed_form::kahler_g1(n, p), closed_form::kahler_g2(n, p)};
  }
  const std::size_t base = raw.size();
  for (std::size_t i = 0; i < base; ++i) raw.push_back({raw[i][2], raw[i][1], raw[i][0], raw[i][3]});
  std::vector<Metric4<Rational>> out;
  for (const auto& x : raw) {
    const auto g = normalize(x);
    if (!is_einstein(sys, g)) throw CertificationError("Kahler-Einstein tuple fails the Einstein system");
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  }
  std::sort(out.begin(), out.end(), canonical_less<Rational>);
  return out;
}

inline std::vector<Metric4<Rational>> kahler_einstein_metrics(const FlagSpace& s) {
  return kahler_einstein_metrics(s, einstein_system(s));
}

/// Common value of the Ricci components; NotEinstein if they differ.
inline Rational einstein_constant(const FlagSpace& s, const Metric4<Rational>& g) {
  const auto r = ricci_components(s, g);
  if (r.r1 != r.r2 || r.r1 != r.r3 || r.r1 != r.r4) throw NotEinstein("Ricci components differ");
  return r.r1;
}

/// Enclosure of the Einstein constant from interval metric entries; the
/// intersection of the four component enclosures. NotEinstein if two
/// components are certified different.
inline RatInterval einstein_constant(const FlagSpace& s, const Metric4<RatInterval>& g) {
  const auto r = ricci_components(s, g).as_array();
  RatInterval e = r[0];
  for (int k = 1; k < 4; ++k) {
    if (!overlaps(e, r[k])) throw NotEinstein("Ricci component enclosures are disjoint");
    e = intersect(e, r[k]);
  }
  return e;
}

}  // namespace einflag
