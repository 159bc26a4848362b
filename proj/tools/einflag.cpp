#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "report.hpp"

using namespace einflag;
using report::json;

namespace {

constexpr int kOk = 0;
constexpr int kBadInput = 2;
constexpr int kCertFailure = 3;

struct PairResult {
  int n = 0, p = 0;
  std::optional<Pipeline> pipeline;
  std::optional<LemmaReport> lemmas;
  std::string error;
  bool bad_input = false;
  double seconds = 0;
};

/// Runs `work` over [0, count) on `jobs` threads; result slots are filled by index.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& work) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) work(i);
    });
  }
  for (auto& th : pool) th.join();
}

PairResult run_pair(int n, int p, bool lemmas, const SolverOptions& opt) {
  PairResult r;
  r.n = n;
  r.p = p;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.pipeline = run_pipeline(n, p, opt);
    if (lemmas) r.lemmas = verify_lemmas(n, p);
  } catch (const InvalidParameters& e) {
    r.bad_input = true;
    r.error = e.what();
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

bool split_ok(const PairResult& r) {
  return r.pipeline && r.pipeline->solutions.size() == 6 && r.pipeline->count(SolutionKind::NonKahler) == 2 &&
         r.pipeline->case1_solutions.empty();
}

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot open " << path << '\n';
    return kBadInput;
  }
  out << text;
  return kOk;
}

int cmd_solve(int n, int p, int digits, const std::string& format, bool with_lemmas) {
  const SolverOptions opt = SolverOptions::from_environment();
  try {
    const Pipeline r = run_pipeline(n, p, opt);
    std::optional<LemmaReport> lem;
    if (with_lemmas) lem = verify_lemmas(n, p);
    if (format == "json") {
      json j = report::pair_json(r.space, r.solutions, digits);
      j["nonkahler_pairing"] = nonkahler_pairing(r.solutions);
      if (lem) j["lemmas"] = report::lemmas_json(*lem);
      std::cout << j.dump(2) << '\n';
    } else if (format == "csv") {
      std::cout << report::csv_header() << report::csv_rows(r.space, r.solutions);
    } else {
      std::cout << report::table(r.space, r.solutions, digits);
      if (lem) std::cout << '\n' << report::lemma_table(*lem, false);
    }
    return lem && !lem->all_pass() ? kCertFailure : kOk;
  } catch (const InvalidParameters& e) {
    std::cerr << "invalid parameters: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "certification failure: " << e.what() << '\n';
    return kCertFailure;
  }
}

std::vector<std::pair<int, int>> pair_range(int n_min, int n_max) {
  std::vector<std::pair<int, int>> out;
  for (int n = n_min; n <= n_max; ++n)
    for (int p = 1; p < n; ++p) out.emplace_back(n, p);
  return out;
}

int cmd_sweep(int n_min, int n_max, int digits, const std::string& format, const std::string& out_path, int jobs,
              bool timing) {
  if (n_max < 3 || n_min < 3 || n_min > n_max) {
    std::cerr << "invalid parameters: need 3 <= n-min <= n-max\n";
    return kBadInput;
  }
  const SolverOptions opt = SolverOptions::from_environment();
  const auto pairs = pair_range(n_min, n_max);
  std::vector<PairResult> results(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t i) { results[i] = run_pair(pairs[i].first, pairs[i].second, true, opt); });

  std::map<std::pair<int, int>, std::size_t> index;
  for (std::size_t i = 0; i < pairs.size(); ++i) index[pairs[i]] = i;
  int code = kOk;
  std::string first_failure;
  json arr = json::array();
  std::string csv = report::csv_header();
  std::ostringstream tab;
  tab << "  n   p  total kahler non_kahler lemmas duality\n";
  for (const auto& r : results) {
    bool dual = false;
    if (r.pipeline) {
      const auto& other = results[index.at({r.n, r.n - r.p})];
      dual = other.pipeline && duality_check(r.pipeline->solutions, other.pipeline->solutions);
    }
    const bool lem_ok = r.lemmas && r.lemmas->all_pass();
    const bool ok = split_ok(r) && lem_ok && dual;
    if (!ok && code == kOk) {
      code = kCertFailure;
      first_failure = "n=" + std::to_string(r.n) + " p=" + std::to_string(r.p) + (r.error.empty() ? "" : ": " + r.error);
    }
    if (!r.pipeline) {
      arr.push_back({{"n", r.n}, {"p", r.p}, {"error", r.error}});
      tab << std::setw(3) << r.n << ' ' << std::setw(3) << r.p << "  error: " << r.error << '\n';
      continue;
    }
    const auto& pl = *r.pipeline;
    json j = report::pair_json(pl.space, pl.solutions, digits);
    j["lemmas"] = report::lemma_summary(*r.lemmas);
    j["duality_check"] = dual;
    j["nonkahler_pairing"] = nonkahler_pairing(pl.solutions);
    if (timing) j["wall_time_s"] = r.seconds;
    arr.push_back(j);
    csv += report::csv_rows(pl.space, pl.solutions);
    tab << std::setw(3) << r.n << ' ' << std::setw(3) << r.p << "  " << std::setw(5) << pl.solutions.size() << ' '
        << std::setw(6) << pl.count(SolutionKind::Kahler) << ' ' << std::setw(10) << pl.count(SolutionKind::NonKahler)
        << ' ' << std::setw(6) << (lem_ok ? "pass" : "FAIL") << ' ' << std::setw(7) << (dual ? "true" : "false");
    if (timing) tab << "  " << std::fixed << std::setprecision(3) << r.seconds << 's';
    tab << '\n';
  }
  std::string text;
  if (format == "json")
    text = arr.dump(2) + "\n";
  else if (format == "csv")
    text = csv;
  else
    text = tab.str();
  if (const int w = write_output(text, out_path); w != kOk) return w;
  if (code != kOk) std::cerr << "first failure: " << first_failure << '\n';
  return code;
}

int cmd_lemmas(std::optional<int> n, std::optional<int> p, std::optional<int> n_max, int n_min,
               const std::string& format, int jobs) {
  std::vector<std::pair<int, int>> pairs;
  if (n_max) {
    if (*n_max < 3 || n_min < 3 || n_min > *n_max) {
      std::cerr << "invalid parameters: need 3 <= n-min <= n-max\n";
      return kBadInput;
    }
    pairs = pair_range(n_min, *n_max);
  } else if (n && p) {
    pairs.emplace_back(*n, *p);
  } else {
    std::cerr << "invalid parameters: give --n and --p, or --n-max\n";
    return kBadInput;
  }
  std::vector<std::optional<LemmaReport>> reps(pairs.size());
  std::vector<std::string> errors(pairs.size());
  std::vector<char> bad_input(pairs.size(), 0);
  parallel_for(pairs.size(), jobs, [&](std::size_t i) {
    try {
      reps[i] = verify_lemmas(pairs[i].first, pairs[i].second);
    } catch (const InvalidParameters& e) {
      bad_input[i] = 1;
      errors[i] = e.what();
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  int code = kOk;
  int passed = 0;
  json arr = json::array();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (bad_input[i]) {
      std::cerr << "invalid parameters: " << errors[i] << '\n';
      return kBadInput;
    }
    if (!reps[i]) {
      std::cerr << "n=" << pairs[i].first << " p=" << pairs[i].second << ": " << errors[i] << '\n';
      code = kCertFailure;
      continue;
    }
    const auto& r = *reps[i];
    if (r.all_pass())
      ++passed;
    else
      code = kCertFailure;
    if (format == "json") {
      arr.push_back({{"n", r.n}, {"p", r.p}, {"all_pass", r.all_pass()}, {"lemmas", report::lemmas_json(r)}});
    } else if (pairs.size() == 1) {
      std::cout << report::lemma_table(r, true);
    } else if (!r.all_pass()) {
      std::cout << report::lemma_table(r, true);
    }
  }
  if (format == "json")
    std::cout << arr.dump(2) << '\n';
  else if (pairs.size() > 1)
    std::cout << "pairs: " << pairs.size() << ", passing: " << passed << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant Einstein metrics on Sp(n)/(U(p) x U(n-p))"};
  app.require_subcommand(1);

  int n = 0, p = 0, digits = 30, jobs = 1, n_min = 3, n_max = 0;
  std::string format = "table", out_path;
  bool with_lemmas = false, timing = false;

  auto* solve = app.add_subcommand("solve", "classify the invariant Einstein metrics for one (n, p)");
  solve->add_option("--n", n, "rank n >= 3")->required();
  solve->add_option("--p", p, "1 <= p <= n-1")->required();
  solve->add_option("--digits", digits, "decimal digits")->check(CLI::Range(1, 10000));
  solve->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));
  solve->add_flag("--with-lemmas", with_lemmas, "also run the lemma checks");

  auto* sweep = app.add_subcommand("sweep", "run every pair n-min <= n <= n-max");
  sweep->add_option("--n-max", n_max)->required();
  sweep->add_option("--n-min", n_min);
  sweep->add_option("--digits", digits)->check(CLI::Range(1, 10000));
  sweep->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));
  sweep->add_option("--out", out_path, "write the report here instead of stdout");
  sweep->add_option("--jobs", jobs, "concurrent pipelines")->check(CLI::Range(1, 256));
  sweep->add_flag("--timing", timing, "include wall time per pair");

  std::optional<int> ln, lp, lmax;
  auto* lemmas = app.add_subcommand("lemmas", "check the lemma suite");
  lemmas->add_option("--n", ln);
  lemmas->add_option("--p", lp);
  lemmas->add_option("--n-max", lmax);
  lemmas->add_option("--n-min", n_min);
  lemmas->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
  lemmas->add_option("--jobs", jobs)->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  if (*solve) return cmd_solve(n, p, digits, format, with_lemmas);
  if (*sweep) return cmd_sweep(n_min, n_max, digits, format, out_path, jobs, timing);
  return cmd_lemmas(ln, lp, lmax, n_min, format, jobs);
}
