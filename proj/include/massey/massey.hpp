#pragma once

#include <string>

#include "json.hpp"
#include "massey/galois.hpp"

namespace massey {

enum class MasseyStatus { Empty, ContainsZero, NonVanishing };

const char* status_name(MasseyStatus s);

struct MasseyVerdict {
  MasseyStatus status = MasseyStatus::ContainsZero;
  std::string reason;
  nlohmann::ordered_json witness;  // null when there is nothing to show
};

bool cup_vanishes(const Character& chi1, const Character& chi2, const GbarGroup& g);
MasseyVerdict triple_verdict(const Character& chi1, const Character& chi2, const Character& chi3,
                             const GbarGroup& g);
// chi lifts to a homomorphism into Z/9
bool bockstein_vanishes(const Character& chi, const GbarGroup& g);
bool bockstein_vanishes(const Character& chi, const Presentation& P, int ell);

// verdict for <chi, chi, chi> with chi given by the abstract data
MasseyVerdict thm52_check(const AbstractGaloisData& d);

struct Thm11Result {
  bool exists_nonvanishing = false;
  std::string branch;  // "i", "ii" or "none"
  nlohmann::ordered_json witness;
};
Thm11Result thm11_check(const AbstractGaloisData& d);

}  // namespace massey
