#include "massey/report.hpp"

#include <random>
#include <sstream>

#include "massey/massey.hpp"

namespace massey {

std::string TripleSelection::label() const {
  switch (kind) {
    case All: return "all";
    case SameChar: return "same-char";
    case Sample: return "sample " + std::to_string(count);
  }
  return "?";
}

TripleSelection parse_selection(const std::vector<std::string>& words) {
  if (words.empty()) return {};
  const std::string& w = words[0];
  if ((w == "all" || w == "exhaustive" || w == "same-char") && words.size() == 1)
    return {w == "same-char" ? TripleSelection::SameChar : TripleSelection::All, 0};
  if (w == "sample" && words.size() == 2) {
    std::size_t pos = 0;
    long long n = -1;
    try {
      n = std::stoll(words[1], &pos);
    } catch (const std::exception&) {
    }
    if (pos != words[1].size() || n <= 0) throw Error(ErrorCode::InvalidArgument, "sample size must be a positive integer");
    return {TripleSelection::Sample, static_cast<std::size_t>(n)};
  }
  throw Error(ErrorCode::InvalidArgument, "expected all, exhaustive, same-char or 'sample N'");
}

std::vector<std::array<std::size_t, 3>> select_triples(std::size_t n, const TripleSelection& s, std::uint64_t seed) {
  std::vector<std::array<std::size_t, 3>> out;
  if (!n) return out;
  switch (s.kind) {
    case TripleSelection::All:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) out.push_back({i, j, k});
      break;
    case TripleSelection::SameChar:
      for (std::size_t i = 0; i < n; ++i) out.push_back({i, i, i});
      break;
    case TripleSelection::Sample: {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (std::size_t t = 0; t < s.count; ++t) {
        std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
        out.push_back({i, j, k});
      }
      break;
    }
  }
  return out;
}

Curve curve_from_flags(Residue p, int k0, const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  if (!fp::is_prime(p)) throw Error(ErrorCode::NotPrime, "p must be prime");
  if (k0 < 1) throw Error(ErrorCode::InvalidArgument, "k0 must be positive");
  if (static_cast<int>(a.size()) > k0 || static_cast<int>(b.size()) > k0)
    throw Error(ErrorCode::InvalidArgument, "more coefficients than the base degree");
  auto F = make_field(p, k0);
  return curve_new(F, F->from_coeffs(a), F->from_coeffs(b));
}

ojson element_json(const FieldElement& x) {
  ojson j = ojson::array();
  for (Residue c : x.coeffs()) j.push_back(c);
  return j;
}

ojson matrix_json(const Mat2& m) { return {{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}}; }

ojson character_json(const Character& c) {
  ojson j = ojson::array();
  for (int v : c.values) j.push_back(v);
  return j;
}

ojson curve_json(const Curve& E) {
  return {{"p", E.characteristic()}, {"k0", E.base_degree()}, {"a", element_json(E.a)},
          {"b", element_json(E.b)},  {"j", element_json(E.j)}};
}

namespace {

ojson group_header(const Curve& E, const GbarGroup& g) {
  ojson r;
  r["curve"] = curve_json(E);
  r["ell"] = g.ell;
  r["ell_prime"] = g.ell_prime;
  r["case"] = case_name(g.kind);
  r["frobenius_matrix_l"] = matrix_json(g.frob_l.m);
  r["frobenius_matrix_lprime"] = g.frob_lprime ? matrix_json(g.frob_lprime->m) : ojson(nullptr);
  r["group"] = {{"order", g.order()}, {"generators", g.generator_names}};
  r["constants"] = {{"alpha", g.constants.alpha}, {"beta", g.constants.beta}, {"gamma", g.constants.gamma},
                    {"delta", g.constants.delta}, {"c", g.constants.c}};
  return r;
}

ojson meta(std::uint64_t seed, const std::string& mode) {
  return {{"seed", seed}, {"mode", mode}, {"elapsed_ms", nullptr}};
}

}  // namespace

ojson analysis_report(const Curve& E, int ell, const TripleSelection& sel, std::uint64_t seed) {
  const GbarGroup g = build_gbar(E, ell, seed);
  const auto chars = enumerate_characters(g);
  ojson r = group_header(E, g);
  ojson cj = ojson::array();
  for (const auto& c : chars) cj.push_back(character_json(c));
  r["characters"] = cj;
  ojson rows = ojson::array();
  for (const auto& [i, j, k] : select_triples(chars.size(), sel, seed)) {
    const auto v = triple_verdict(chars[i], chars[j], chars[k], g);
    rows.push_back({{"chi1", character_json(chars[i])}, {"chi2", character_json(chars[j])},
                    {"chi3", character_json(chars[k])}, {"status", status_name(v.status)},
                    {"reason", v.reason},              {"witness", v.witness}});
  }
  r["verdicts"] = rows;
  r["meta"] = meta(seed, sel.label());
  return r;
}

bool exhaustive_allowed(int ell, GaloisCase kind) {
  return ell == 3 || ((kind == GaloisCase::SplitLine || kind == GaloisCase::UnipotentLine) && ell <= 5);
}

VerifyOutcome verify_report(const Curve& E, int ell, const TripleSelection& sel, std::uint64_t seed,
                            SearchMode oracle_mode) {
  const GbarGroup g = build_gbar(E, ell, seed);
  if (sel.kind == TripleSelection::All && !exhaustive_allowed(ell, g.kind))
    throw Error(ErrorCode::InvalidArgument, std::string("exhaustive verification is not offered for ") +
                                                case_name(g.kind) + " with ell = " + std::to_string(ell));
  const auto chars = enumerate_characters(g);
  VerifyOutcome out;
  ojson r = group_header(E, g);
  r["oracle"] = oracle_mode == SearchMode::Linearized ? "linearized" : "exhaustive";
  std::size_t checked = 0;
  ojson counts = {{"Empty", 0}, {"ContainsZero", 0}, {"NonVanishing", 0}};
  ojson bad = ojson::array();
  for (const auto& [i, j, k] : select_triples(chars.size(), sel, seed)) {
    const auto v = triple_verdict(chars[i], chars[j], chars[k], g);
    const auto o = oracle_status(chars[i], chars[j], chars[k], g.pres, oracle_mode);
    ++checked;
    counts[status_name(o)] = counts[status_name(o)].get<int>() + 1;
    if (v.status != o)
      bad.push_back({{"chi1", character_json(chars[i])}, {"chi2", character_json(chars[j])},
                     {"chi3", character_json(chars[k])}, {"engine", status_name(v.status)},
                     {"oracle", status_name(o)}});
  }
  out.mismatches = bad.size();
  r["checked"] = checked;
  r["oracle_counts"] = counts;
  r["mismatch_count"] = bad.size();
  r["mismatches"] = bad;
  r["meta"] = meta(seed, sel.kind == TripleSelection::All ? "exhaustive" : sel.label());
  out.report = std::move(r);
  return out;
}

ojson search_report(const SearchOptions& o, const std::vector<SearchHit>& hits) {
  ojson rows = ojson::array();
  for (const auto& h : hits) {
    ojson row = {{"p", h.p}, {"a", h.a}, {"b", h.b}};
    if (h.t) row["t"] = *h.t;
    row["order"] = h.order;
    row["frobenius_matrix"] = matrix_json(h.A.m);
    rows.push_back(row);
  }
  return {{"ell", o.ell},
          {"case", search_case_name(o.kind)},
          {"family", o.igusa ? "igusa" : "weierstrass"},
          {"max_p", o.max_p},
          {"rows", rows},
          {"meta", meta(o.seed, "search")}};
}

ojson galois_check_report(const AbstractGaloisData& d, int theorem) {
  ojson r;
  r["theorem"] = std::to_string(theorem);
  r["closure_size"] = d.closure.size();
  r["matrix_count"] = d.matrices.size();
  if (theorem == 52) {
    const auto v = thm52_check(d);
    r["status"] = status_name(v.status);
    r["reason"] = v.reason;
    r["witness"] = v.witness;
  } else if (theorem == 11) {
    const auto t = thm11_check(d);
    r["exists_non_vanishing_chi"] = t.exists_nonvanishing;
    r["branch"] = t.branch;
    r["witness"] = t.witness;
  } else {
    throw Error(ErrorCode::InvalidArgument, "theorem must be 52 or 11");
  }
  return r;
}

ojson error_json(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

ojson error_json(const Error& e) { return error_json(error_name(e.code()), e.what()); }

namespace {

std::string vec_cell(const ojson& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x.dump();
  return s;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

std::string verdicts_csv(const ojson& report) {
  std::ostringstream os;
  os << "chi1,chi2,chi3,status,reason,witness\n";
  for (const auto& v : report["verdicts"])
    os << vec_cell(v["chi1"]) << ',' << vec_cell(v["chi2"]) << ',' << vec_cell(v["chi3"]) << ','
       << v["status"].get<std::string>() << ',' << v["reason"].get<std::string>() << ','
       << (v["witness"].is_null() ? "" : quote(v["witness"].dump())) << '\n';
  return os.str();
}

std::string mismatches_csv(const ojson& report) {
  std::ostringstream os;
  os << "chi1,chi2,chi3,engine,oracle\n";
  for (const auto& v : report["mismatches"])
    os << vec_cell(v["chi1"]) << ',' << vec_cell(v["chi2"]) << ',' << vec_cell(v["chi3"]) << ','
       << v["engine"].get<std::string>() << ',' << v["oracle"].get<std::string>() << '\n';
  return os.str();
}

std::string search_csv(const ojson& report) {
  std::ostringstream os;
  os << "p,a,b,t,order,frobenius_matrix\n";
  for (const auto& r : report["rows"]) {
    const auto& m = r["frobenius_matrix"];
    os << r["p"] << ',' << r["a"] << ',' << r["b"] << ',' << (r.contains("t") ? r["t"].dump() : "") << ','
       << r["order"] << ',' << m[0][0] << ' ' << m[0][1] << ' ' << m[1][0] << ' ' << m[1][1] << '\n';
  }
  return os.str();
}

}  // namespace massey
