#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "einflag/flagmodel.hpp"

namespace einflag {

/// Floating-point cross-check: damped Newton on r1 - r3, r1 - r2, r3 - r4 with
/// x1 = 1, from a grid of starts, using the structure-constant Ricci formula.
struct NewtonOptions {
  int grid_density = 10;
  double grid_lo = 0.6, grid_hi = 6.0;
  int max_iterations = 100;
  double residual_tol = 1e-12;
  double cluster_tol = 1e-6;
};

namespace detail {

class RicciEvaluator {
 public:
  explicit RicciEvaluator(const TripleTable& t) {
    const int s = static_cast<int>(t.size());
    for (int k = 1; k <= s; ++k) {
      const Rational& dk = t.dim(static_cast<std::size_t>(k));
      for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= s; ++j) {
          const Rational v = t.get(i, j, k);
          if (v == 0) continue;
          terms_.push_back({k - 1, i - 1, j - 1, Rational(v / (4 * dk)).get_d(), Rational(v / (2 * dk)).get_d()});
        }
    }
    size_ = s;
  }

  std::vector<double> operator()(const std::vector<double>& x) const {
    std::vector<double> r(size_);
    for (int k = 0; k < size_; ++k) r[k] = 0.5 / x[k];
    for (const auto& t : terms_) r[t.k] += t.plus * x[t.k] / (x[t.i] * x[t.j]) - t.minus * x[t.j] / (x[t.k] * x[t.i]);
    return r;
  }

 private:
  struct Term {
    int k, i, j;
    double plus, minus;
  };
  std::vector<Term> terms_;
  int size_ = 0;
};

inline std::array<double, 3> newton_residual(const RicciEvaluator& ric, const std::array<double, 3>& y) {
  const auto r = ric({1.0, std::exp(y[0]), std::exp(y[1]), std::exp(y[2])});
  return {r[0] - r[2], r[0] - r[1], r[2] - r[3]};
}

inline double norm3(const std::array<double, 3>& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

inline bool solve3(std::array<std::array<double, 3>, 3> a, std::array<double, 3>& b) {
  for (int c = 0; c < 3; ++c) {
    int piv = c;
    for (int r = c + 1; r < 3; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    if (std::fabs(a[piv][c]) < 1e-300) return false;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (int r = c + 1; r < 3; ++r) {
      const double m = a[r][c] / a[c][c];
      for (int k = c; k < 3; ++k) a[r][k] -= m * a[c][k];
      b[r] -= m * b[c];
    }
  }
  for (int c = 2; c >= 0; --c) {
    for (int k = c + 1; k < 3; ++k) b[c] -= a[c][k] * b[k];
    b[c] /= a[c][c];
  }
  return true;
}

/// Newton in log coordinates; nullopt when the start does not converge.
inline std::optional<std::array<double, 3>> newton_from(const RicciEvaluator& ric, std::array<double, 3> y,
                                                        const NewtonOptions& opt) {
  constexpr double h = 1e-7;
  for (int it = 0; it < opt.max_iterations; ++it) {
    const auto F = newton_residual(ric, y);
    const double nf = norm3(F);
    if (nf < opt.residual_tol * 1e-2) break;
    std::array<std::array<double, 3>, 3> J{};
    for (int k = 0; k < 3; ++k) {
      auto yp = y, ym = y;
      yp[k] += h;
      ym[k] -= h;
      const auto fp = newton_residual(ric, yp), fm = newton_residual(ric, ym);
      for (int r = 0; r < 3; ++r) J[r][k] = (fp[r] - fm[r]) / (2 * h);
    }
    std::array<double, 3> d{-F[0], -F[1], -F[2]};
    if (!solve3(J, d)) return std::nullopt;
    double lam = 1.0;
    bool moved = false;
    while (lam > 1e-6) {
      const std::array<double, 3> yn{y[0] + lam * d[0], y[1] + lam * d[1], y[2] + lam * d[2]};
      if (std::fabs(yn[0]) < 30 && std::fabs(yn[1]) < 30 && std::fabs(yn[2]) < 30 && norm3(newton_residual(ric, yn)) < nf) {
        y = yn;
        moved = true;
        break;
      }
      lam /= 2;
    }
    if (!moved) break;
  }
  if (norm3(newton_residual(ric, y)) < opt.residual_tol) return y;
  return std::nullopt;
}

}  // namespace detail

/// Distinct converged metrics (1, x2, x3, x4), sorted by (x3, x4, x2).
inline std::vector<std::array<double, 4>> newton_oracle(int n, int p, const NewtonOptions& opt = {}) {
  const FlagSpace s = make_flag_space(n, p);
  const detail::RicciEvaluator ric(flag_triple_table(s));
  std::vector<double> grid;
  for (int k = 0; k < opt.grid_density; ++k)
    grid.push_back(opt.grid_density == 1 ? opt.grid_lo
                                         : opt.grid_lo + (opt.grid_hi - opt.grid_lo) * k / (opt.grid_density - 1));
  std::vector<std::array<double, 4>> out;
  for (double a : grid)
    for (double b : grid)
      for (double c : grid) {
        const auto y = detail::newton_from(ric, {std::log(a), std::log(b), std::log(c)}, opt);
        if (!y) continue;
        const std::array<double, 4> x{1.0, std::exp((*y)[0]), std::exp((*y)[1]), std::exp((*y)[2])};
        bool seen = false;
        for (const auto& z : out) {
          double d = 0;
          for (int k = 1; k < 4; ++k) d = std::max(d, std::fabs(x[k] - z[k]));
          if (d < opt.cluster_tol) {
            seen = true;
            break;
          }
        }
        if (!seen) out.push_back(x);
      }
  const double tol = opt.cluster_tol;
  std::sort(out.begin(), out.end(), [tol](const auto& u, const auto& v) {
    if (std::fabs(u[2] - v[2]) > tol) return u[2] < v[2];
    if (std::fabs(u[3] - v[3]) > tol) return u[3] < v[3];
    return u[1] < v[1];
  });
  return out;
}

}  // namespace einflag
