// massey: curve search, verdict reports, engine-vs-oracle sweeps, abstract Galois checks.
#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "massey/report.hpp"

using namespace massey;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInputError = 2, kNoMatch = 3 };

struct Common {
  std::string format = "json";
  std::uint64_t seed = kDefaultSeed;
  bool timing = false;
};

struct CurveFlags {
  Residue p = 0;
  int k0 = 1;
  std::vector<std::int64_t> a{0}, b{0};
  int ell = 3;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--seed", c.seed, "seed for sampling and point selection");
  app->add_flag("--timing", c.timing, "fill meta.elapsed_ms (output then varies between runs)");
}

void add_curve(CLI::App* app, CurveFlags& f) {
  app->add_option("--p", f.p, "characteristic")->required();
  app->add_option("--k0", f.k0, "base field degree");
  app->add_option("--a", f.a, "coefficient of x, as c0,c1,...")->delimiter(',');
  app->add_option("--b", f.b, "constant term, as c0,c1,...")->delimiter(',');
  app->add_option("--ell", f.ell, "3, 5 or 7")->required()->check(CLI::IsMember({3, 5, 7}));
}

void emit(const ojson& j) { std::cout << j.dump(2) << "\n"; }

void stamp(ojson& report, const Common& c, std::chrono::steady_clock::time_point t0) {
  if (!c.timing || !report.contains("meta")) return;
  report["meta"]["elapsed_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triple Massey products for elliptic curves over finite fields"};
  app.require_subcommand(1);

  Common common;
  SearchOptions so;
  std::string case_flag, family = "weierstrass";
  std::optional<int> residue;
  auto* search = app.add_subcommand("search", "find curves with a given Frobenius shape");
  add_common(search, common);
  search->add_option("--ell", so.ell)->required()->check(CLI::IsMember({3, 5, 7}));
  search->add_option("--case", case_flag)->required()->check(CLI::IsMember({"full3", "split", "unipotent"}));
  search->add_option("--max-p", so.max_p)->required()->check(CLI::Range(std::uint64_t{5}, kMaxCountField));
  search->add_option("--min-p", so.min_p);
  search->add_option("--limit", so.limit, "0 for no limit")->check(CLI::NonNegativeNumber);
  search->add_option("--per-prime", so.per_prime, "0 for no limit")->check(CLI::NonNegativeNumber);
  search->add_option("--p-residue", residue, "keep only p congruent to this mod ell");
  search->add_option("--family", family)->check(CLI::IsMember({"weierstrass", "igusa"}));

  CurveFlags cf;
  std::vector<std::string> triples{"all"}, mode{"exhaustive"};
  std::string oracle = "linearized";
  auto* analyze = app.add_subcommand("analyze", "verdict table for one curve");
  add_common(analyze, common);
  add_curve(analyze, cf);
  analyze->add_option("--triples", triples, "all | same-char | sample N")->expected(1, 2);

  auto* verify = app.add_subcommand("verify", "compare closed-form verdicts with the oracle");
  add_common(verify, common);
  add_curve(verify, cf);
  verify->add_option("--mode", mode, "exhaustive | sample N")->expected(1, 2);
  verify->add_option("--oracle", oracle)->check(CLI::IsMember({"linearized", "exhaustive"}));

  std::string input;
  int theorem = 0;
  auto* gcheck = app.add_subcommand("galois-check", "checkers for abstract Galois data");
  add_common(gcheck, common);
  gcheck->add_option("--input", input, "JSON file")->required();
  gcheck->add_option("--theorem", theorem)->required()->check(CLI::IsMember({52, 11}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit(error_json("InvalidArgument", e.what()));
    return kInputError;
  }

  const auto t0 = std::chrono::steady_clock::now();
  const bool csv = common.format == "csv";
  try {
    if (search->parsed()) {
      so.kind = parse_search_case(case_flag);
      so.p_residue = residue;
      so.igusa = family == "igusa";
      so.seed = common.seed;
      const auto hits = search_curves(so);
      if (hits.empty()) {
        emit(error_json("NoMatch", "no curve found within the bounds"));
        return kNoMatch;
      }
      ojson r = search_report(so, hits);
      stamp(r, common, t0);
      if (csv) std::cout << search_csv(r);
      else emit(r);
      return kOk;
    }
    if (analyze->parsed()) {
      const Curve E = curve_from_flags(cf.p, cf.k0, cf.a, cf.b);
      ojson r = analysis_report(E, cf.ell, parse_selection(triples), common.seed);
      stamp(r, common, t0);
      if (csv) std::cout << verdicts_csv(r);
      else emit(r);
      return kOk;
    }
    if (verify->parsed()) {
      const Curve E = curve_from_flags(cf.p, cf.k0, cf.a, cf.b);
      const auto sel = parse_selection(mode);
      if (sel.kind == TripleSelection::SameChar) throw Error(ErrorCode::InvalidArgument, "--mode is exhaustive or sample N");
      auto out = verify_report(E, cf.ell, sel, common.seed,
                               oracle == "exhaustive" ? SearchMode::Exhaustive : SearchMode::Linearized);
      stamp(out.report, common, t0);
      if (csv) std::cout << mismatches_csv(out.report);
      else emit(out.report);
      return out.mismatches ? kMismatch : kOk;
    }
    if (gcheck->parsed()) {
      std::ifstream in(input);
      if (!in) throw Error(ErrorCode::InvalidData, "cannot open " + input);
      nlohmann::json data;
      try {
        data = nlohmann::json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::InvalidData, std::string("malformed JSON: ") + e.what());
      }
      ojson r = galois_check_report(load_abstract(data), theorem);
      if (csv) {
        std::cout << "theorem,result,reason\n" << r["theorem"].get<std::string>() << ',';
        if (theorem == 52) std::cout << r["status"].get<std::string>() << ',' << r["reason"].get<std::string>() << '\n';
        else std::cout << r["branch"].get<std::string>() << ",\n";
      } else {
        emit(r);
      }
      return kOk;
    }
  } catch (const Error& e) {
    emit(error_json(e));
    return e.code() == ErrorCode::NoMatch ? kNoMatch : kInputError;
  }
  return kInputError;
}
