#pragma once

#include <vector>

#include "massey/galois.hpp"
#include "massey/massey.hpp"
#include "massey/unitri.hpp"

namespace massey {

// Brute-force decision procedures working only from the presentation.
//   Exhaustive: depth-first search over all generator images, pruning on relators.
//   Linearized: with the superdiagonal fixed the relator corners are affine in
//     the free entries, so solve that system mod ell and then re-check the lift
//     by direct evaluation.
enum class SearchMode { Linearized, Exhaustive };

std::vector<Character> oracle_characters(const Presentation& P, int ell);

bool oracle_cup(const Character& chi1, const Character& chi2, const Presentation& P);

struct Lift {
  bool found = false;
  std::vector<U4Matrix> images;  // one per generator
};

// homomorphism into U4/center with the given superdiagonal
Lift oracle_defining_system(const Character& chi1, const Character& chi2, const Character& chi3,
                            const Presentation& P, SearchMode mode = SearchMode::Linearized);
// honest homomorphism into U4
Lift oracle_zero_lift(const Character& chi1, const Character& chi2, const Character& chi3,
                      const Presentation& P, SearchMode mode = SearchMode::Linearized);

bool lift_is_homomorphism(const std::vector<U4Matrix>& images, const Presentation& P, bool modulo_center);

MasseyStatus oracle_status(const Character& chi1, const Character& chi2, const Character& chi3,
                           const Presentation& P, SearchMode mode = SearchMode::Linearized);

}  // namespace massey
