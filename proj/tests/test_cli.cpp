#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(MASSEY_CLI) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), f)) out.append(buf.data(), n);
  int status = pclose(f);
  return {WEXITSTATUS(status), out};
}

nlohmann::json run_json(const std::string& args, int expected_code) {
  CliRun r = run(args);
  EXPECT_EQ(r.code, expected_code) << args << "\n" << r.out;
  return nlohmann::json::parse(r.out);
}

std::string data(const std::string& name) { return std::string(MASSEY_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, SearchUnipotentFive) {
  auto j = run_json("search --ell 5 --case unipotent --max-p 2000 --limit 5", 0);
  ASSERT_FALSE(j["rows"].empty());
  for (const auto& r : j["rows"]) {
    const long p = r["p"], n = r["order"];
    EXPECT_EQ(p % 5, 1);
    EXPECT_EQ(n % 5, 0);
    const auto& m = r["frobenius_matrix"];
    EXPECT_EQ((int(m[0][0]) + int(m[1][1])) % 5, 2);
  }
}

TEST(Cli, SearchSplitAndFull) {
  auto split = run_json("search --ell 3 --case split --max-p 100 --p-residue 2", 0);
  for (const auto& r : split["rows"]) {
    EXPECT_EQ(int(r["p"]) % 3, 2);
    EXPECT_EQ(int(r["order"]) % 3, 0);
  }
  auto full = run_json("search --ell 3 --case full3 --max-p 200 --limit 20", 0);
  for (const auto& r : full["rows"]) EXPECT_EQ(int(r["p"]) % 3, 1);
}

TEST(Cli, SearchIgusa) {
  auto j = run_json("search --ell 3 --case full3 --max-p 200 --family igusa --limit 3", 0);
  for (const auto& r : j["rows"]) EXPECT_TRUE(r.contains("t"));
}

TEST(Cli, SearchNoMatch) {
  auto j = run_json("search --ell 5 --case unipotent --max-p 7", 3);
  EXPECT_EQ(j["error"]["code"], "NoMatch");
}

TEST(Cli, AnalyzeReportShape) {
  auto j = run_json("analyze --p 11 --a 1 --b 7 --ell 5 --triples sample 50", 0);
  for (const char* k : {"curve", "ell", "ell_prime", "case", "frobenius_matrix_l", "frobenius_matrix_lprime",
                        "constants", "characters", "verdicts", "meta"})
    EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j["case"], "UnipotentLine");
  EXPECT_EQ(j["verdicts"].size(), 50u);
  EXPECT_TRUE(j["meta"]["elapsed_ms"].is_null());
  for (const auto& k : {"alpha", "beta", "gamma", "delta", "c"}) EXPECT_TRUE(j["constants"].contains(k));
}

TEST(Cli, AnalyzeUnipotentHasNonVanishing) {
  auto j = run_json("analyze --p 11 --a 1 --b 7 --ell 5", 0);
  int nv = 0;
  for (const auto& v : j["verdicts"])
    if (v["status"] == "NonVanishing") {
      ++nv;
      EXPECT_FALSE(v["witness"].is_null());
    }
  EXPECT_GT(nv, 0);
}

TEST(Cli, AnalyzeSplitSevenNeverNonVanishing) {
  auto j = run_json("analyze --p 23 --a 1 --b 1 --ell 7 --triples sample 2000", 0);
  EXPECT_EQ(j["case"], "SplitLine");
  for (const auto& v : j["verdicts"]) EXPECT_NE(v["status"], "NonVanishing");
}

TEST(Cli, AnalyzeScalarFullTorsion) {
  auto j = run_json("analyze --p 61 --a 0 --b 5 --ell 3", 0);
  EXPECT_EQ(j["case"], "FullTorsion");
  for (const auto& v : j["verdicts"]) EXPECT_NE(v["status"], "NonVanishing");
}

TEST(Cli, AnalyzePrimePowerBase) {
  auto j = run_json("analyze --p 5 --k0 2 --a 1,1 --b 2 --ell 3 --triples same-char", 0);
  EXPECT_EQ(j["curve"]["k0"], 2);
  EXPECT_EQ(j["curve"]["a"], nlohmann::json::array({1, 1}));
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run_json("analyze --p 7 --a 0 --b 0 --ell 3", 2)["error"]["code"], "SingularCurve");
  EXPECT_EQ(run_json("analyze --p 3 --a 1 --b 1 --ell 3", 2)["error"]["code"], "BadCharacteristic");
  EXPECT_EQ(run_json("analyze --p 9 --a 1 --b 1 --ell 3", 2)["error"]["code"], "NotPrime");
  EXPECT_EQ(run_json("analyze --p 7 --a 1 --b 1 --ell 4", 2)["error"]["code"], "InvalidArgument");
  EXPECT_EQ(run_json("verify --p 23 --a 1 --b 1 --ell 7", 2)["error"]["code"], "InvalidArgument");
  EXPECT_EQ(run_json("analyze --p 7 --a 1 --b 1 --ell 3 --triples sample x", 2)["error"]["code"], "InvalidArgument");
}

TEST(Cli, VerifyExitCodes) {
  auto j = run_json("verify --p 7 --a 0 --b 1 --ell 3", 0);
  EXPECT_EQ(j["mismatch_count"], 0);
  EXPECT_EQ(j["checked"], 729);
  j = run_json("verify --p 29 --a 1 --b 7 --ell 7 --mode sample 40", 0);
  EXPECT_EQ(j["checked"], 40);
}

TEST(Cli, Deterministic) {
  const std::string args = "analyze --p 29 --a 1 --b 7 --ell 7 --triples sample 100";
  EXPECT_EQ(run(args).out, run(args).out);
  EXPECT_NE(run(args).out, run(args + " --seed 7").out);
  EXPECT_EQ(run(args + " --seed 0xC0FFEE").out, run(args).out);
}

TEST(Cli, CsvOutput) {
  CliRun r = run("analyze --p 7 --a 0 --b 1 --ell 3 --triples same-char --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("chi1,chi2,chi3,status,reason,witness\n", 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 10);
}

TEST(Cli, GaloisCheck) {
  auto j = run_json("galois-check --theorem 11 --input " + data("scalar_finite_field.json"), 0);
  EXPECT_EQ(j["branch"], "none");
  EXPECT_EQ(j["exists_non_vanishing_chi"], false);
  j = run_json("galois-check --theorem 11 --input " + data("nonscalar.json"), 0);
  EXPECT_EQ(j["branch"], "i");
  EXPECT_EQ(j["exists_non_vanishing_chi"], true);
  j = run_json("galois-check --theorem 52 --input " + data("nonscalar.json"), 0);
  EXPECT_EQ(j["status"], "NonVanishing");
  EXPECT_TRUE(j["witness"].contains("a"));
  EXPECT_TRUE(j["witness"].contains("sigma"));
  j = run_json("galois-check --theorem 52 --input " + data("condition_two.json"), 0);
  EXPECT_EQ(j["reason"], "condition-2");
}

TEST(Cli, GaloisCheckSchemaErrors) {
  auto j = run_json("galois-check --theorem 52 --input " + data("bad_entry.json"), 2);
  EXPECT_EQ(j["error"]["message"], "generators[0][1][1]: expected an integer");
  j = run_json("galois-check --theorem 11 --input " + data("not_congruent.json"), 2);
  EXPECT_EQ(j["error"]["code"], "NotCongruentIdentity");
  j = run_json("galois-check --theorem 11 --input " + data("truncated.json"), 2);
  EXPECT_EQ(j["error"]["code"], "InvalidData");
  j = run_json("galois-check --theorem 11 --input " + data("missing.json"), 2);
  EXPECT_EQ(j["error"]["code"], "InvalidData");
  j = run_json("galois-check --theorem 12 --input " + data("nonscalar.json"), 2);
  EXPECT_EQ(j["error"]["code"], "InvalidArgument");
}
