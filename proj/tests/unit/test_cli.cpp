#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>
#include <sys/wait.h>

#include "einflag/rational.hpp"

using json = nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(EINFLAG_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t k = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), k);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int count_kind(const json& sols, const std::string& kind) {
  int k = 0;
  for (const auto& s : sols) k += s["kind"] == kind;
  return k;
}

}  // namespace

TEST(Cli, SolveJson) {
  const CliRun r = run("solve --n 3 --p 1 --format json");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["solutions"].size(), 6u);
  EXPECT_EQ(count_kind(j["solutions"], "non_kahler"), 2);
}

TEST(Cli, SolveSelfDual) {
  const CliRun r = run("solve --n 4 --p 2 --format json");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["solutions"].size(), 6u);
  EXPECT_EQ(count_kind(j["solutions"], "kahler"), 4);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("solve --n 3 --p 3").code, 2);
  EXPECT_EQ(run("sweep --n-max 2").code, 2);
  EXPECT_EQ(run("solve --n 3").code, 2);
  EXPECT_EQ(run("lemmas").code, 2);
}

TEST(Cli, DecimalsReproducibleFromExactFields) {
  const CliRun r = run("solve --n 5 --p 2 --format json --digits 25");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  for (const auto& s : j["solutions"]) {
    for (const auto& [name, x] : s["metric"].items()) {
      einflag::Rational v;
      if (x.contains("rational")) {
        v = einflag::Rational(x["rational"].get<std::string>());
      } else {
        v = (einflag::Rational(x["interval"][0].get<std::string>()) + einflag::Rational(x["interval"][1].get<std::string>())) / 2;
      }
      v.canonicalize();
      EXPECT_EQ(einflag::to_decimal(v, 25), x["decimal"].get<std::string>()) << name;
    }
  }
}

TEST(Cli, SweepCsv) {
  const std::string path = ::testing::TempDir() + "einflag_sweep.csv";
  ASSERT_EQ(run("sweep --n-max 10 --format csv --out " + path).code, 0);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,p,idx,kind,x1,x2,x3,x4,einstein_constant,origin");
  int rows = 0, nonkahler = 0;
  while (std::getline(in, line)) {
    ++rows;
    nonkahler += line.find(",non_kahler,") != std::string::npos;
  }
  EXPECT_EQ(rows, 44 * 6);
  EXPECT_EQ(nonkahler, 44 * 2);
}

TEST(Cli, SweepJsonDuality) {
  const CliRun r = run("sweep --n-max 6 --format json");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.size(), 14u);
  for (const auto& rec : j) {
    EXPECT_TRUE(rec["duality_check"].get<bool>());
    EXPECT_EQ(rec["counts"]["total"], 6);
    EXPECT_EQ(rec["counts"]["non_kahler"], 2);
    EXPECT_TRUE(rec["lemmas"]["all_pass"].get<bool>());
  }
}

TEST(Cli, DeterministicAcrossJobs) {
  const CliRun a = run("sweep --n-max 7 --format json --jobs 1");
  const CliRun b = run("sweep --n-max 7 --format json --jobs 3");
  const CliRun c = run("sweep --n-max 7 --format json --jobs 1");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}

TEST(Cli, Lemmas) {
  const CliRun a = run("lemmas --n 3 --p 1");
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("lemmas n=3 p=1: pass"), std::string::npos);
  const CliRun b = run("lemmas --n 10 --p 7");
  EXPECT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("L2 pass"), std::string::npos);
  EXPECT_NE(b.out.find("L3 pass"), std::string::npos);
  const CliRun c = run("lemmas --n-max 15");
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("pairs: 104, passing: 104"), std::string::npos);
}

TEST(Cli, CsvAndTable) {
  const CliRun a = run("solve --n 3 --p 1 --format csv");
  ASSERT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("3,1,5,kahler,1,2,3,4,3/16,case2a-sub2"), std::string::npos);
  const CliRun b = run("solve --n 3 --p 1 --with-lemmas");
  ASSERT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("solutions: 6 (kahler 4, non_kahler 2)"), std::string::npos);
  EXPECT_NE(b.out.find("L9 pass"), std::string::npos);
}
