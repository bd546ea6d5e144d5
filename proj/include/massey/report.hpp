#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "massey/ec.hpp"
#include "massey/galois.hpp"
#include "massey/oracle.hpp"
#include "massey/search.hpp"

namespace massey {

using ojson = nlohmann::ordered_json;

// "all", "same-char", "sample N" (verify also accepts "exhaustive")
struct TripleSelection {
  enum Kind { All, SameChar, Sample } kind = All;
  std::size_t count = 0;
  std::string label() const;
};
TripleSelection parse_selection(const std::vector<std::string>& words);
// indices into the character list; sampling draws with replacement
std::vector<std::array<std::size_t, 3>> select_triples(std::size_t n_chars, const TripleSelection& s,
                                                       std::uint64_t seed);

// coefficients c0, c1, ... of the base field element
Curve curve_from_flags(Residue p, int k0, const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b);

ojson element_json(const FieldElement& x);
ojson matrix_json(const Mat2& m);
ojson character_json(const Character& c);
ojson curve_json(const Curve& E);

ojson analysis_report(const Curve& E, int ell, const TripleSelection& sel, std::uint64_t seed);

struct VerifyOutcome {
  ojson report;
  std::size_t mismatches = 0;
};
// exhaustive selection only for ell = 3, or for split/unipotent with ell <= 5
bool exhaustive_allowed(int ell, GaloisCase kind);
VerifyOutcome verify_report(const Curve& E, int ell, const TripleSelection& sel, std::uint64_t seed,
                            SearchMode oracle_mode = SearchMode::Linearized);

ojson search_report(const SearchOptions& o, const std::vector<SearchHit>& hits);
ojson galois_check_report(const AbstractGaloisData& d, int theorem);

ojson error_json(const Error& e);
ojson error_json(const std::string& code, const std::string& message);

// CSV renderings of the verdict table / search rows
std::string verdicts_csv(const ojson& report);
std::string mismatches_csv(const ojson& report);
std::string search_csv(const ojson& report);

}  // namespace massey
