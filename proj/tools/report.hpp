#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "einflag/einflag.hpp"

namespace einflag::report {

using json = nlohmann::ordered_json;

inline json number(const Rational& q, int digits) { return {{"decimal", to_decimal(q, digits)}, {"rational", to_string(q)}}; }

inline json number(const RatInterval& x, int digits) {
  if (x.is_point()) return number(x.lo(), digits);
  return {{"decimal", to_decimal(x.midpoint(), digits)}, {"interval", {to_string(x.lo()), to_string(x.hi())}}};
}

/// Exact text for CSV: a/b, or [lo;hi] for an enclosure.
inline std::string exact_text(const RatInterval& x) {
  if (x.is_point()) return to_string(x.lo());
  return "[" + to_string(x.lo()) + ";" + to_string(x.hi()) + "]";
}

inline json solution_json(const EinsteinSolution& s, std::size_t idx, int digits) {
  json j;
  j["idx"] = idx;
  j["kind"] = to_string(s.kind);
  j["origin"] = to_string(s.origin);
  const auto m = s.metric.as_array();
  json metric;
  for (int k = 0; k < 4; ++k) metric["x" + std::to_string(k + 1)] = number(m[k], digits);
  j["metric"] = metric;
  j["einstein_constant"] = number(s.einstein_constant, digits);
  j["certificate"] = {{"positivity", s.certificate.positivity},
                      {"residual", s.certificate.residual},
                      {"distinct", s.certificate.distinct}};
  if (s.defining_polynomial) j["defining_polynomial"] = to_string(*s.defining_polynomial);
  return j;
}

inline json lemmas_json(const LemmaReport& r) {
  json out = json::array();
  for (const auto& v : r.verdicts) {
    json w = json::array();
    for (const auto& x : v.witnesses) w.push_back({{"name", x.name}, {"value", x.value}, {"ok", x.ok}});
    out.push_back({{"id", v.id}, {"statement", v.statement}, {"applicable", v.applicable}, {"pass", v.passed()},
                   {"witnesses", w}});
  }
  return out;
}

inline json lemma_summary(const LemmaReport& r) {
  json failed = json::array();
  for (const auto& v : r.verdicts) {
    if (!v.passed()) failed.push_back(v.id);
  }
  return {{"all_pass", r.all_pass()}, {"failed", failed}};
}

inline json dimensions_json(const FlagSpace& s) {
  json d = json::array();
  for (const auto& x : s.dims()) d.push_back(x);
  return d;
}

inline json counts_json(const std::vector<EinsteinSolution>& sols) {
  int k = 0;
  for (const auto& s : sols) k += s.kind == SolutionKind::Kahler;
  return {{"total", sols.size()}, {"kahler", k}, {"non_kahler", static_cast<int>(sols.size()) - k}};
}

inline json pair_json(const FlagSpace& space, const std::vector<EinsteinSolution>& sols, int digits) {
  json j;
  j["n"] = space.n;
  j["p"] = space.p;
  j["dimensions"] = dimensions_json(space);
  j["counts"] = counts_json(sols);
  json arr = json::array();
  for (std::size_t i = 0; i < sols.size(); ++i) arr.push_back(solution_json(sols[i], i, digits));
  j["solutions"] = arr;
  return j;
}

inline std::string csv_header() { return "n,p,idx,kind,x1,x2,x3,x4,einstein_constant,origin\n"; }

inline std::string csv_rows(const FlagSpace& space, const std::vector<EinsteinSolution>& sols) {
  std::ostringstream os;
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const auto& s = sols[i];
    os << space.n << ',' << space.p << ',' << i << ',' << to_string(s.kind);
    for (const auto& x : s.metric.as_array()) os << ',' << exact_text(x);
    os << ',' << exact_text(s.einstein_constant) << ',' << to_string(s.origin) << '\n';
  }
  return os.str();
}

inline std::string table(const FlagSpace& space, const std::vector<EinsteinSolution>& sols, int digits) {
  std::ostringstream os;
  const auto d = space.dims();
  os << "Sp(" << space.n << ")/(U(" << space.p << ") x U(" << space.n - space.p << "))  dims " << d[0]
     << ' ' << d[1] << ' ' << d[2] << ' ' << d[3] << '\n';
  const auto c = counts_json(sols);
  os << "solutions: " << c["total"].get<int>() << " (kahler " << c["kahler"].get<int>() << ", non_kahler "
     << c["non_kahler"].get<int>() << ")\n";
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const auto& s = sols[i];
    os << '\n' << '[' << i << "] " << to_string(s.kind) << "  (" << to_string(s.origin) << ")\n";
    const auto m = s.metric.as_array();
    for (int k = 0; k < 4; ++k) {
      os << "  x" << k + 1 << " = " << to_decimal(m[k].midpoint(), digits);
      if (m[k].is_point()) os << "  = " << to_string(m[k].lo());
      os << '\n';
    }
    os << "  einstein constant = " << to_decimal(s.einstein_constant.midpoint(), digits);
    if (s.exact_einstein_constant) os << "  = " << to_string(*s.exact_einstein_constant);
    os << '\n';
    if (s.defining_polynomial) os << "  x3 root of " << to_string(*s.defining_polynomial) << '\n';
  }
  return os.str();
}

inline std::string lemma_table(const LemmaReport& r, bool details) {
  std::ostringstream os;
  os << "lemmas n=" << r.n << " p=" << r.p << ": " << (r.all_pass() ? "pass" : "FAIL") << '\n';
  for (const auto& v : r.verdicts) {
    const char* status = !v.applicable ? "n/a " : (v.pass ? "pass" : "FAIL");
    os << "  " << v.id << ' ' << status << "  " << v.statement << '\n';
    if (!details || !v.applicable) continue;
    for (const auto& w : v.witnesses) os << "      " << (w.ok ? "  " : "! ") << w.name << ": " << w.value << '\n';
  }
  return os.str();
}

}  // namespace einflag::report
