#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "einflag/errors.hpp"
#include "einflag/rational.hpp"
#include "einflag/unipoly.hpp"

namespace einflag {

/// Sparse polynomial in N variables over the rationals. Exponents are signed
/// so that Laurent expressions (such as Ricci components before clearing
/// denominators) can be represented; most operations expect nonnegative
/// exponents. No zero coefficient is ever stored.
template <std::size_t N>
class SparsePoly {
 public:
  using Exponent = std::array<int, N>;
  using Names = std::array<std::string, N>;
  using Terms = std::map<Exponent, Rational>;

  SparsePoly() { vars_ = default_names(); }
  explicit SparsePoly(Names names) : vars_(std::move(names)) {}

  static SparsePoly constant(const Rational& c, Names names = default_names()) {
    SparsePoly r(std::move(names));
    if (c != 0) r.terms_[Exponent{}] = c;
    return r;
  }

  static SparsePoly term(const Rational& c, const Exponent& e, Names names = default_names()) {
    SparsePoly r(std::move(names));
    if (c != 0) r.terms_[e] = c;
    return r;
  }

  static SparsePoly variable(std::size_t i, Names names = default_names()) {
    Exponent e{};
    e[i] = 1;
    return term(Rational(1), e, std::move(names));
  }

  static Names default_names() {
    Names n;
    for (std::size_t i = 0; i < N; ++i) n[i] = "x" + std::to_string(i + 1);
    return n;
  }

  const Terms& terms() const { return terms_; }
  const Names& vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Lexicographically greatest term (variable 0 most significant).
  std::pair<Exponent, Rational> leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading_term of zero polynomial");
    return *terms_.rbegin();
  }

  int degree_in(std::size_t i) const {
    int d = -1;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first || e[i] > d) d = e[i];
      first = false;
    }
    return d;
  }

  int min_exponent(std::size_t i) const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first || e[i] < d) d = e[i];
      first = false;
    }
    return d;
  }

  bool involves(std::size_t i) const {
    for (const auto& [e, c] : terms_) {
      if (e[i] != 0) return true;
    }
    return false;
  }

  /// Total degree if every term has the same total degree.
  std::optional<int> homogeneous_degree() const {
    std::optional<int> deg;
    for (const auto& [e, c] : terms_) {
      int t = 0;
      for (int k : e) t += k;
      if (deg && *deg != t) return std::nullopt;
      deg = t;
    }
    return deg;
  }

  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  SparsePoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const Rational& s) { return a *= s; }
  friend SparsePoly operator*(const Rational& s, SparsePoly a) { return a *= s; }
  friend SparsePoly operator+(SparsePoly a, const Rational& s) { return a += constant(s, a.vars_); }
  friend SparsePoly operator+(const Rational& s, SparsePoly a) { return a += constant(s, a.vars_); }
  friend SparsePoly operator-(SparsePoly a, const Rational& s) { return a -= constant(s, a.vars_); }
  friend SparsePoly operator-(const Rational& s, const SparsePoly& a) { return constant(s, a.vars_) - a; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e;
        for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  /// Multiply by the monomial var^shift (shift may be negative).
  SparsePoly shifted(const Exponent& shift) const {
    SparsePoly r(vars_);
    for (const auto& [e, c] : terms_) {
      Exponent f;
      for (std::size_t i = 0; i < N; ++i) f[i] = e[i] + shift[i];
      r.terms_.emplace(f, c);
    }
    return r;
  }

  /// Evaluate at a point. T must support +, *, and construction from a
  /// Rational through `lift`; negative exponents use `inv`.
  template <class T, class Lift, class Inv>
  T evaluate(const std::array<T, N>& x, Lift lift, Inv inv) const {
    T acc = lift(Rational(0));
    for (const auto& [e, c] : terms_) {
      T t = lift(c);
      for (std::size_t i = 0; i < N; ++i) {
        const int k = e[i];
        if (k == 0) continue;
        const T base = k > 0 ? x[i] : inv(x[i]);
        for (int j = 0; j < (k > 0 ? k : -k); ++j) t = t * base;
      }
      acc = acc + t;
    }
    return acc;
  }

  Rational operator()(const std::array<Rational, N>& x) const {
    return evaluate<Rational>(
        x, [](const Rational& q) { return q; }, [](const Rational& q) { return Rational(1 / q); });
  }

  /// Set variable i to the value v; the result no longer involves i.
  SparsePoly specialize(std::size_t i, const Rational& v) const {
    SparsePoly r(vars_);
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      f[i] = 0;
      r.add_term(f, c * (e[i] >= 0 ? pow(v, static_cast<unsigned>(e[i])) : 1 / pow(v, static_cast<unsigned>(-e[i]))));
    }
    return r;
  }

  /// Coefficients in variable i: result[k] multiplies var_i^k. Requires
  /// nonnegative exponents in i.
  std::vector<SparsePoly> coefficients_in(std::size_t i) const {
    std::vector<SparsePoly> out(static_cast<std::size_t>(std::max(degree_in(i), -1) + 1), SparsePoly(vars_));
    for (const auto& [e, c] : terms_) {
      if (e[i] < 0) throw std::domain_error("coefficients_in: negative exponent");
      Exponent f = e;
      f[i] = 0;
      out[static_cast<std::size_t>(e[i])].add_term(f, c);
    }
    return out;
  }

  /// The polynomial as a UniPoly in variable i; throws if any other variable occurs.
  UniPoly as_univariate(std::size_t i) const {
    std::vector<Rational> v(static_cast<std::size_t>(std::max(degree_in(i), -1) + 1));
    for (const auto& [e, c] : terms_) {
      for (std::size_t j = 0; j < N; ++j) {
        if (j != i && e[j] != 0) throw std::domain_error("as_univariate: polynomial involves " + vars_[j]);
      }
      if (e[i] < 0) throw std::domain_error("as_univariate: negative exponent");
      v[static_cast<std::size_t>(e[i])] += c;
    }
    return UniPoly(std::move(v), vars_[i]);
  }

  static SparsePoly from_univariate(const UniPoly& f, std::size_t i, Names names = default_names()) {
    SparsePoly r(std::move(names));
    for (int k = 0; k <= f.degree(); ++k) {
      Exponent e{};
      e[i] = k;
      r.add_term(e, f.coeff(k));
    }
    return r;
  }

  /// Replace variable i by num/den and multiply through by den^deg_i; num
  /// and den must not involve variable i.
  SparsePoly substitute_fraction(std::size_t i, const SparsePoly& num, const SparsePoly& den) const {
    const int d = degree_in(i);
    if (min_exponent(i) < 0) throw std::domain_error("substitute_fraction: negative exponent");
    const auto coeffs = coefficients_in(i);
    std::vector<SparsePoly> num_pow{constant(1, vars_)}, den_pow{constant(1, vars_)};
    for (int k = 1; k <= d; ++k) {
      num_pow.push_back(num_pow.back() * num);
      den_pow.push_back(den_pow.back() * den);
    }
    SparsePoly r(vars_);
    for (int k = 0; k <= d; ++k) {
      const auto& c = coeffs[static_cast<std::size_t>(k)];
      if (c.is_zero()) continue;
      r += c * num_pow[static_cast<std::size_t>(k)] * den_pow[static_cast<std::size_t>(d - k)];
    }
    return r;
  }

  /// Positive rational c such that this / c has coprime integer coefficients.
  Rational content() const {
    if (terms_.empty()) return Rational(0);
    Integer g(0), l(1);
    for (const auto& [e, c] : terms_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    return make_rational(g, l);
  }

  /// Smallest integer-coefficient representative: shift so every variable's
  /// minimal exponent is zero, scale by the lcm of denominators, strip the
  /// integer content, and make the leading term positive.
  SparsePoly clear_denominators() const {
    if (terms_.empty()) return *this;
    Exponent shift;
    for (std::size_t i = 0; i < N; ++i) shift[i] = -min_exponent(i);
    SparsePoly r = shifted(shift);
    Rational c = r.content();
    if (sgn(r.leading_term().second) < 0) c = -c;
    return r * Rational(1 / c);
  }

  SparsePoly with_vars(Names names) const {
    SparsePoly r = *this;
    r.vars_ = std::move(names);
    return r;
  }

 private:
  void add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  template <std::size_t M>
  friend class SparsePoly;

  Terms terms_;
  Names vars_;
};

using BiPoly = SparsePoly<2>;
using Poly4 = SparsePoly<4>;

template <std::size_t N>
SparsePoly<N> pow(const SparsePoly<N>& f, unsigned k) {
  auto r = SparsePoly<N>::constant(1, f.vars());
  for (unsigned i = 0; i < k; ++i) r *= f;
  return r;
}

/// c with f == c * g, if such a nonzero rational exists.
template <std::size_t N>
std::optional<Rational> scalar_ratio(const SparsePoly<N>& f, const SparsePoly<N>& g) {
  if (f.is_zero() || g.is_zero() || f.size() != g.size()) return std::nullopt;
  const Rational c = f.leading_term().second / g.leading_term().second;
  if (f == g * c) return c;
  return std::nullopt;
}

/// Exact quotient f / g under lexicographic order; NotDivisible otherwise.
template <std::size_t N>
SparsePoly<N> exact_divide(const SparsePoly<N>& f, const SparsePoly<N>& g) {
  if (g.is_zero()) throw std::domain_error("exact_divide by zero polynomial");
  const auto [ge, gc] = g.leading_term();
  SparsePoly<N> rem = f;
  SparsePoly<N> quo(f.vars());
  while (!rem.is_zero()) {
    const auto [re, rc] = rem.leading_term();
    typename SparsePoly<N>::Exponent shift;
    for (std::size_t i = 0; i < N; ++i) {
      shift[i] = re[i] - ge[i];
      if (shift[i] < 0) throw NotDivisible("exact_divide: leading monomial not divisible");
    }
    const auto t = SparsePoly<N>::term(rc / gc, shift, f.vars());
    quo += t;
    rem -= t * g;
  }
  return quo;
}

/// Keep only the listed variables (in the given order); every other
/// variable must be absent.
template <std::size_t M, std::size_t N>
SparsePoly<M> restrict_vars(const SparsePoly<N>& f, const std::array<std::size_t, M>& keep) {
  typename SparsePoly<M>::Names names;
  for (std::size_t j = 0; j < M; ++j) names[j] = f.vars()[keep[j]];
  SparsePoly<M> r(names);
  for (const auto& [e, c] : f.terms()) {
    typename SparsePoly<M>::Exponent g{};
    std::array<bool, N> used{};
    for (std::size_t j = 0; j < M; ++j) {
      g[j] = e[keep[j]];
      used[keep[j]] = true;
    }
    for (std::size_t i = 0; i < N; ++i) {
      if (!used[i] && e[i] != 0) throw std::domain_error("restrict_vars: polynomial involves " + f.vars()[i]);
    }
    r += SparsePoly<M>::term(c, g, names);
  }
  return r;
}

/// Dense coefficients in variable `main` with UniPoly coefficients in
/// variable `other`; a BiPoly viewed as an element of Q[other][main].
inline std::vector<UniPoly> to_dense(const BiPoly& f, std::size_t main) {
  const std::size_t other = 1 - main;
  const auto coeffs = f.coefficients_in(main);
  std::vector<UniPoly> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(c.as_univariate(other));
  return out;
}

/// f(x, y) with the UniPoly-in-`main` coefficient of var `other` fixed.
inline UniPoly specialize_to_univariate(const BiPoly& f, std::size_t fixed, const Rational& v) {
  return f.specialize(fixed, v).as_univariate(1 - fixed);
}

template <std::size_t N>
std::string to_string(const SparsePoly<N>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = true;
    for (int k : e) constant = constant && k == 0;
    if (constant || mag != 1) os << mag.get_str();
    bool need_star = !constant && mag != 1;
    for (std::size_t i = 0; i < N; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << f.vars()[i];
      if (e[i] != 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace einflag
