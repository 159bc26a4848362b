#pragma once

#include <algorithm>
#include <vector>

#include "einflag/solver/case1.hpp"
#include "einflag/solver/case2.hpp"

namespace einflag {

/// Every intermediate object of one (n, p) run.
struct Pipeline {
  FlagSpace space;
  EinsteinSystem system;
  std::vector<Metric4<Rational>> kahler;
  Case1Data case1;
  Case2Data case2;
  PFactorization factorization;
  Case2bReport case2b;
  std::vector<EinsteinSolution> case1_solutions;
  std::vector<EinsteinSolution> case2a_solutions;
  std::vector<EinsteinSolution> case2b_solutions;
  std::vector<EinsteinSolution> solutions;  // deduplicated, sorted by x3

  int count(SolutionKind k) const {
    return static_cast<int>(std::count_if(solutions.begin(), solutions.end(), [&](const auto& s) { return s.kind == k; }));
  }
};

/// Merges candidate lists in order, dropping repeats, and sorts by x3.
inline std::vector<EinsteinSolution> merge_solutions(const std::vector<const std::vector<EinsteinSolution>*>& lists) {
  std::vector<EinsteinSolution> out;
  for (const auto* l : lists) {
    for (const auto& s : *l) {
      if (std::none_of(out.begin(), out.end(), [&](const auto& t) { return same_metric(s, t); })) out.push_back(s);
    }
  }
  for (auto& s : out) s.certificate.distinct = true;
  std::sort(out.begin(), out.end(), solution_less);
  return out;
}

inline Pipeline run_pipeline(int n, int p, const SolverOptions& opt = SolverOptions::from_environment()) {
  Pipeline r;
  r.space = make_flag_space(n, p);
  r.system = einstein_system(r.space);
  r.kahler = kahler_einstein_metrics(r.space, r.system);
  r.case1 = build_case1(r.space, r.system);
  r.case1_solutions = solve_case1(r.space, r.case1, r.kahler, opt);
  r.case2 = build_case2(r.space, r.system);
  r.factorization = factor_resultant_P(r.space, r.case2.F1, r.case2.F2);
  r.case2a_solutions = solve_case2a(r.space, r.factorization, r.case2, r.system, r.kahler, opt);
  auto b = solve_case2b_detailed(r.space, r.factorization.Q, r.case2, r.system, r.kahler, opt);
  r.case2b = b.report;
  r.case2b_solutions = std::move(b.solutions);
  r.solutions = merge_solutions({&r.case1_solutions, &r.case2a_solutions, &r.case2b_solutions});
  return r;
}

inline std::vector<EinsteinSolution> enumerate_einstein(int n, int p,
                                                        const SolverOptions& opt = SolverOptions::from_environment()) {
  return run_pipeline(n, p, opt).solutions;
}

}  // namespace einflag
