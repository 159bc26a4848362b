#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "einflag/errors.hpp"
#include "einflag/rational.hpp"
#include "einflag/sparse_poly.hpp"
#include "einflag/unipoly.hpp"

namespace einflag {

// Ring adaptors. A dense polynomial over R is a std::vector<R> with index k
// holding the coefficient of X^k, trimmed so the last entry is nonzero.

inline bool ring_is_zero(const Rational& a) { return a == 0; }
inline bool ring_is_zero(const UniPoly& a) { return a.is_zero(); }
inline Rational ring_divide(const Rational& a, const Rational& b) { return a / b; }
inline UniPoly ring_divide(const UniPoly& a, const UniPoly& b) { return exact_divide(a, b); }

template <class R>
R ring_one(const R& like);
template <>
inline Rational ring_one(const Rational&) {
  return Rational(1);
}
template <>
inline UniPoly ring_one(const UniPoly& like) {
  return UniPoly::constant(1, like.var());
}

template <class R>
R ring_zero(const R& like) {
  return ring_one(like) * Rational(0);
}

template <class R>
R ring_pow(const R& a, int k) {
  R r = ring_one(a);
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

template <class R>
int dense_degree(const std::vector<R>& a) {
  return static_cast<int>(a.size()) - 1;
}

template <class R>
void dense_trim(std::vector<R>& a) {
  while (!a.empty() && ring_is_zero(a.back())) a.pop_back();
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, fraction free.
template <class R>
std::vector<R> pseudo_remainder(std::vector<R> a, const std::vector<R>& b) {
  const int db = dense_degree(b);
  if (db < 0) throw std::domain_error("pseudo_remainder by zero");
  int da = dense_degree(a);
  if (da < db) return a;
  const R& lb = b.back();
  int e = da - db + 1;
  while (da >= db && !a.empty()) {
    const R la = a.back();
    const int shift = da - db;
    for (auto& c : a) c = c * lb;
    for (int j = 0; j <= db; ++j) {
      a[static_cast<std::size_t>(shift + j)] = a[static_cast<std::size_t>(shift + j)] - la * b[static_cast<std::size_t>(j)];
    }
    --e;
    dense_trim(a);
    da = dense_degree(a);
  }
  if (e > 0) {
    const R f = ring_pow(lb, e);
    for (auto& c : a) c = c * f;
  }
  return a;
}

/**
 * Resultant of two dense polynomials over an integral domain R by the
 * subresultant polynomial remainder sequence (Collins / Brown), without
 * content removal. Sign convention: the Sylvester determinant with the
 * rows of @p f first and coefficients in descending order.
 */
template <class R>
R subresultant_resultant(std::vector<R> f, std::vector<R> g) {
  dense_trim(f);
  dense_trim(g);
  if (f.empty() || g.empty()) throw std::domain_error("resultant of zero polynomial");
  const R one = ring_one(f.back());
  int s = 1;
  if (dense_degree(f) < dense_degree(g)) {
    if (dense_degree(f) % 2 == 1 && dense_degree(g) % 2 == 1) s = -1;
    std::swap(f, g);
  }
  if (dense_degree(g) == 0) return ring_pow(g[0], dense_degree(f)) * Rational(s);
  R gg = one, h = one;
  std::vector<R> a = std::move(f), b = std::move(g);
  while (true) {
    const int da = dense_degree(a), db = dense_degree(b);
    const int delta = da - db;
    if (da % 2 == 1 && db % 2 == 1) s = -s;
    std::vector<R> r = pseudo_remainder(a, b);
    a = std::move(b);
    const R div = gg * ring_pow(h, delta);
    for (auto& c : r) c = ring_divide(c, div);
    b = std::move(r);
    gg = a.back();
    if (delta == 0) {
      // h unchanged
    } else {
      h = ring_divide(ring_pow(gg, delta), ring_pow(h, delta - 1));
    }
    if (dense_degree(b) > 0) continue;
    if (b.empty()) return ring_zero(one);
    const int dA = dense_degree(a);
    R out = ring_divide(ring_pow(b[0], dA), ring_pow(h, dA - 1));
    return out * Rational(s);
  }
}

/// Determinant of a square matrix over R by Bareiss fraction-free
/// elimination with row pivoting.
template <class R>
R bareiss_determinant(std::vector<std::vector<R>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::domain_error("determinant of empty matrix");
  const R one = ring_one(m[0][0]);
  R prev = one;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ring_is_zero(m[k][k])) {
      std::size_t piv = k + 1;
      while (piv < n && ring_is_zero(m[piv][k])) ++piv;
      if (piv == n) return ring_zero(one);
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = ring_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
    }
    prev = m[k][k];
  }
  return m[n - 1][n - 1] * Rational(sign);
}

/// Sylvester matrix of f (degree m) and g (degree n): n shifted rows of f
/// followed by m shifted rows of g, coefficients in descending order.
template <class R>
std::vector<std::vector<R>> sylvester_matrix(const std::vector<R>& f, const std::vector<R>& g) {
  const int m = dense_degree(f), n = dense_degree(g);
  if (m < 0 || n < 0) throw std::domain_error("sylvester_matrix of zero polynomial");
  const std::size_t size = static_cast<std::size_t>(m + n);
  const R zero = ring_zero(f.back());
  std::vector<std::vector<R>> s(size, std::vector<R>(size, zero));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + m - k)] = f[static_cast<std::size_t>(k)];
  }
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k <= n; ++k) s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + n - k)] = g[static_cast<std::size_t>(k)];
  }
  return s;
}

template <class R>
R sylvester_resultant(const std::vector<R>& f, const std::vector<R>& g) {
  if (dense_degree(f) + dense_degree(g) == 0) return ring_one(f.back());
  return bareiss_determinant(sylvester_matrix(f, g));
}

/**
 * j-th polynomial subresultant of f (degree m) and g (degree n), j < min(m, n):
 * coefficient i (0 <= i <= j) is the determinant of the matrix built from
 * the rows X^(n-j-1) f, ..., f, X^(m-j-1) g, ..., g keeping the first
 * m+n-2j-1 columns (descending powers) and the column of X^i.
 */
template <class R>
std::vector<R> subresultant_polynomial(const std::vector<R>& f, const std::vector<R>& g, int j) {
  const int m = dense_degree(f), n = dense_degree(g);
  if (j < 0 || j >= std::min(m, n)) throw std::domain_error("subresultant index out of range");
  const int rows = m + n - 2 * j;
  const int width = m + n - j;  // powers X^(m+n-j-1) .. X^0
  const R zero = ring_zero(f.back());
  std::vector<std::vector<R>> full;
  auto push_row = [&](const std::vector<R>& p, int shift) {
    std::vector<R> row(static_cast<std::size_t>(width), zero);
    for (int k = 0; k <= dense_degree(p); ++k) {
      const int power = k + shift;
      row[static_cast<std::size_t>(width - 1 - power)] = p[static_cast<std::size_t>(k)];
    }
    full.push_back(std::move(row));
  };
  for (int s = n - j - 1; s >= 0; --s) push_row(f, s);
  for (int s = m - j - 1; s >= 0; --s) push_row(g, s);
  std::vector<R> out;
  for (int i = 0; i <= j; ++i) {
    std::vector<std::vector<R>> sq;
    for (const auto& row : full) {
      std::vector<R> r(row.begin(), row.begin() + (rows - 1));
      r.push_back(row[static_cast<std::size_t>(width - 1 - i)]);
      sq.push_back(std::move(r));
    }
    out.push_back(bareiss_determinant(std::move(sq)));
  }
  dense_trim(out);
  return out;
}

inline std::vector<Rational> dense_coefficients(const UniPoly& f) {
  return {f.coefficients().begin(), f.coefficients().end()};
}

/// Res(f, g) of univariate polynomials.
inline Rational resultant(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant of zero polynomial");
  return subresultant_resultant(dense_coefficients(f), dense_coefficients(g));
}

inline std::size_t bipoly_index(const BiPoly& f, const std::string& var) {
  for (std::size_t i = 0; i < 2; ++i) {
    if (f.vars()[i] == var) return i;
  }
  throw std::invalid_argument("unknown variable " + var);
}

/// Res_v(f, g) as a polynomial in the remaining variable.
inline UniPoly resultant(const BiPoly& f, const BiPoly& g, const std::string& eliminate) {
  const std::size_t v = bipoly_index(f, eliminate);
  if (bipoly_index(g, eliminate) != v) throw std::invalid_argument("resultant: variable order differs");
  if (f.is_zero() || g.is_zero() || f.degree_in(v) < 1 || g.degree_in(v) < 1) {
    throw std::invalid_argument("resultant: inputs must have positive degree in " + eliminate);
  }
  return subresultant_resultant(to_dense(f, v), to_dense(g, v)).with_var(f.vars()[1 - v]);
}

/// Same value through the Sylvester determinant; used as a cross-check.
inline UniPoly sylvester_resultant(const BiPoly& f, const BiPoly& g, const std::string& eliminate) {
  const std::size_t v = bipoly_index(f, eliminate);
  if (f.degree_in(v) < 1 || g.degree_in(v) < 1) {
    throw std::invalid_argument("resultant: inputs must have positive degree in " + eliminate);
  }
  return sylvester_resultant(to_dense(f, v), to_dense(g, v)).with_var(f.vars()[1 - v]);
}

/// Subresultant S_j of f, g in the eliminated variable, as coefficients
/// (UniPoly in the other variable) of powers 0..j.
inline std::vector<UniPoly> subresultant(const BiPoly& f, const BiPoly& g, const std::string& eliminate, int j) {
  const std::size_t v = bipoly_index(f, eliminate);
  return subresultant_polynomial(to_dense(f, v), to_dense(g, v), j);
}

}  // namespace einflag
