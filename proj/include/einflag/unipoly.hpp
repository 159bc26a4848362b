#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "einflag/errors.hpp"
#include "einflag/rational.hpp"

namespace einflag {

/// Dense univariate polynomial over the rationals. Coefficient k multiplies
/// var^k; the coefficient vector is always trimmed so the leading
/// coefficient is nonzero (the zero polynomial has no coefficients).
class UniPoly {
 public:
  UniPoly() = default;

  explicit UniPoly(std::vector<Rational> coefficients, std::string var = "x")
      : coeffs_(std::move(coefficients)), var_(std::move(var)) {
    trim();
  }

  UniPoly(std::initializer_list<Rational> coefficients, std::string var = "x")
      : coeffs_(coefficients), var_(std::move(var)) {
    trim();
  }

  static UniPoly constant(const Rational& c, std::string var = "x") {
    return UniPoly(std::vector<Rational>{c}, std::move(var));
  }

  static UniPoly monomial(const Rational& c, int k, std::string var = "x") {
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return UniPoly(std::move(v), std::move(var));
  }

  /// a*var + b
  static UniPoly linear(const Rational& a, const Rational& b, std::string var = "x") {
    return UniPoly(std::vector<Rational>{b, a}, std::move(var));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  const Rational& coeff(int k) const {
    static const Rational zero(0);
    if (k < 0 || k > degree()) return zero;
    return coeffs_[static_cast<std::size_t>(k)];
  }

  const Rational& leading() const { return coeff(degree()); }

  std::span<const Rational> coefficients() const { return coeffs_; }
  const std::string& var() const { return var_; }

  UniPoly with_var(std::string var) const {
    UniPoly r = *this;
    r.var_ = std::move(var);
    return r;
  }

  Rational operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    adopt_var(o);
    trim();
    return *this;
  }

  UniPoly& operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    adopt_var(o);
    trim();
    return *this;
  }

  UniPoly& operator*=(const Rational& s) {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly({}, a.var_);
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(out), a.var_);
  }

  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  /// Coefficientwise equality; variable tags are labels and do not take part.
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  void adopt_var(const UniPoly& o) {
    if (var_ == "x" && o.var_ != "x") var_ = o.var_;
  }

  std::vector<Rational> coeffs_;
  std::string var_ = "x";
};

inline Rational poly_eval(const UniPoly& f, const Rational& x) { return f(x); }

inline UniPoly derivative(const UniPoly& f) {
  if (f.degree() < 1) return UniPoly({}, f.var());
  std::vector<Rational> out(static_cast<std::size_t>(f.degree()));
  for (int k = 1; k <= f.degree(); ++k) out[static_cast<std::size_t>(k - 1)] = f.coeff(k) * k;
  return UniPoly(std::move(out), f.var());
}

inline UniPoly pow(const UniPoly& f, unsigned k) {
  UniPoly r = UniPoly::constant(1, f.var());
  for (unsigned i = 0; i < k; ++i) r *= f;
  return r;
}

/// Quotient and remainder of Euclidean division over Q.
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  if (f.degree() < g.degree()) return {UniPoly({}, f.var()), f};
  std::vector<Rational> rem(f.coefficients().begin(), f.coefficients().end());
  std::vector<Rational> quo(static_cast<std::size_t>(f.degree() - g.degree()) + 1);
  const Rational& lc = g.leading();
  for (int k = f.degree(); k >= g.degree(); --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / lc;
    if (c == 0) continue;
    const int shift = k - g.degree();
    quo[static_cast<std::size_t>(shift)] = c;
    for (int j = 0; j <= g.degree(); ++j) rem[static_cast<std::size_t>(shift + j)] -= c * g.coeff(j);
  }
  return {UniPoly(std::move(quo), f.var()), UniPoly(std::move(rem), f.var())};
}

inline UniPoly remainder(const UniPoly& f, const UniPoly& g) { return divmod(f, g).second; }

inline bool divides(const UniPoly& g, const UniPoly& f) { return remainder(f, g).is_zero(); }

/// f / g, throwing NotDivisible unless g divides f exactly.
inline UniPoly exact_divide(const UniPoly& f, const UniPoly& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) throw NotDivisible("exact_divide: nonzero remainder of degree " + std::to_string(r.degree()));
  return q;
}

inline UniPoly monic(const UniPoly& f) {
  if (f.is_zero()) return f;
  return f * (1 / f.leading());
}

/// Monic gcd; gcd(0, 0) is the zero polynomial.
inline UniPoly poly_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Positive rational c with f = c * primitive_part(f); primitive part has
/// coprime integer coefficients and positive leading coefficient.
inline Rational content(const UniPoly& f) {
  if (f.is_zero()) return Rational(0);
  Integer num_gcd(0), den_lcm(1);
  for (const auto& c : f.coefficients()) {
    if (c == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r = make_rational(num_gcd, den_lcm);
  if (sgn(f.leading()) < 0) r = -r;
  return r;
}

inline UniPoly primitive_part(const UniPoly& f) {
  if (f.is_zero()) return f;
  return f * (1 / content(f));
}

/// f rescaled so that its leading coefficient equals `target`.
inline UniPoly with_leading(const UniPoly& f, const Rational& target) {
  return f * (target / f.leading());
}

/// c with f == c * g, if such a nonzero rational exists.
inline std::optional<Rational> scalar_ratio(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero() || f.degree() != g.degree()) return std::nullopt;
  const Rational c = f.leading() / g.leading();
  if (f == g * c) return c;
  return std::nullopt;
}

inline UniPoly square_free_part(const UniPoly& f) {
  if (f.degree() < 1) return f;
  return exact_divide(f, poly_gcd(f, derivative(f)));
}

/// Yun's square-free decomposition: f = lc * prod factors[i]^(i+1), each
/// factor monic and square-free, pairwise coprime.
inline std::vector<UniPoly> square_free_decomposition(const UniPoly& f) {
  std::vector<UniPoly> out;
  if (f.degree() < 1) return out;
  UniPoly a = monic(f);
  UniPoly b = poly_gcd(a, derivative(a));
  UniPoly c = exact_divide(a, b);
  UniPoly d = exact_divide(derivative(a), b) - derivative(c);
  while (c.degree() >= 1) {
    UniPoly g = poly_gcd(c, d);
    out.push_back(g);
    c = exact_divide(c, g);
    d = exact_divide(d, g) - derivative(c);
  }
  while (!out.empty() && out.back().degree() < 1) out.pop_back();
  return out;
}

/// f(g(x))
inline UniPoly compose(const UniPoly& f, const UniPoly& g) {
  UniPoly acc({}, g.var());
  for (int k = f.degree(); k >= 0; --k) acc = acc * g + UniPoly::constant(f.coeff(k), g.var());
  return acc;
}

/// Coefficients read the same in both directions (a_k == a_{d-k}).
inline bool is_palindromic(const UniPoly& f) {
  const int d = f.degree();
  for (int k = 0; k <= d; ++k) {
    if (f.coeff(k) != f.coeff(d - k)) return false;
  }
  return true;
}

inline std::string to_string(const UniPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = f.degree(); k >= 0; --k) {
    const Rational& c = f.coeff(k);
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k > 0 && mag != 1) os << "*";
    if (k > 0) os << f.var();
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace einflag
