#pragma once

#include <cstdint>
#include <vector>

#include "massey/galois.hpp"

namespace massey::fixtures {

struct CurveFixture {
  int ell;
  GaloisCase kind;
  std::uint64_t p;
  std::int64_t a, b;
};

// first hits of search_curves for each case (p ascending, then a, then b)
inline const std::vector<CurveFixture> kFull3 = {
    {3, GaloisCase::FullTorsion, 7, 0, 2},
    {3, GaloisCase::FullTorsion, 13, 0, 3},
    {3, GaloisCase::FullTorsion, 19, 0, 5},
};
// Frobenius acts on E[9] as 4I
inline const CurveFixture kFull3Scalar = {3, GaloisCase::FullTorsion, 61, 0, 5};

// p = 2 mod ell
inline const std::vector<CurveFixture> kSplit = {
    {3, GaloisCase::SplitLine, 5, 0, 1},
    {5, GaloisCase::SplitLine, 7, 1, 1},
    {7, GaloisCase::SplitLine, 23, 1, 1},
};

inline const std::vector<CurveFixture> kUnipotent = {
    {3, GaloisCase::UnipotentLine, 7, 0, 1},
    {5, GaloisCase::UnipotentLine, 11, 1, 7},
    {7, GaloisCase::UnipotentLine, 29, 1, 7},
};

inline std::vector<CurveFixture> all_curves() {
  std::vector<CurveFixture> out = kFull3;
  out.push_back(kFull3Scalar);
  out.insert(out.end(), kSplit.begin(), kSplit.end());
  out.insert(out.end(), kUnipotent.begin(), kUnipotent.end());
  return out;
}

inline GbarGroup gbar(const CurveFixture& f) { return build_gbar(curve_from_ints(f.p, f.a, f.b), f.ell); }

}  // namespace massey::fixtures
