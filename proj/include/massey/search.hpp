#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "massey/ec.hpp"
#include "massey/galois.hpp"

namespace massey {

enum class SearchCase { Full3, Split, Unipotent };

const char* search_case_name(SearchCase c);
SearchCase parse_search_case(const std::string& s);

struct SearchOptions {
  int ell = 3;
  SearchCase kind = SearchCase::Full3;
  std::uint64_t min_p = 5;
  std::uint64_t max_p = 1000;
  int limit = 10;      // 0 = no limit
  int per_prime = 0;   // 0 = no limit
  std::optional<int> p_residue;  // keep only p = residue mod ell
  bool igusa = false;  // scan j = t over t instead of (a, b)
  std::uint64_t seed = kDefaultSeed;
};

struct SearchHit {
  std::uint64_t p = 0;
  std::int64_t a = 0, b = 0;
  std::optional<std::int64_t> t;  // Igusa parameter
  std::uint64_t order = 0;        // #E(F_p)
  TorsionAction A;
};

// Deterministic: p ascending, then a, then b (or t).
std::vector<SearchHit> search_curves(const SearchOptions& o);

}  // namespace massey
