#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "massey/ec.hpp"
#include "massey/zmod.hpp"

namespace massey {

enum class GaloisCase { FullTorsion, NoFixedPoints, SplitLine, UnipotentLine };

const char* case_name(GaloisCase c);
GaloisCase classify_case(const TorsionAction& A);

struct Letter {
  int gen;
  int exp;
};
using Word = std::vector<Letter>;

// (Z/torsion_order)^rank semidirect a cyclic group of order top_order.
// Generators 0..rank-1 are the torsion generators, generator `rank` is the
// Frobenius image when top_order > 0.
struct Presentation {
  int torsion_order = 1;
  int rank = 0;
  int top_order = 0;
  Mat2 action = Mat2::Identity();  // column i = image of torsion generator i

  int generator_count() const { return rank + (top_order ? 1 : 0); }
  bool has_top() const { return top_order > 0; }
  int top_index() const { return rank; }
  std::vector<Word> relators() const;
  Presentation torsion_subgroup() const;
};

template <class T, class Mul, class Inv>
T evaluate_word(const Word& w, const std::vector<T>& images, const T& identity, Mul mul, Inv inv) {
  T r = identity;
  for (const auto& [g, e] : w) {
    const T x = e < 0 ? inv(images[g]) : images[g];
    for (int i = 0; i < (e < 0 ? -e : e); ++i) r = mul(r, x);
  }
  return r;
}

// normal form (t, e) of the semidirect product
struct GbarElement {
  Vec2 t = Vec2::Zero();
  int e = 0;
  bool operator==(const GbarElement& o) const { return t == o.t && e == o.e; }
};

GbarElement gbar_identity();
GbarElement gbar_generator(const Presentation& P, int g);
GbarElement gbar_mul(const Presentation& P, const GbarElement& a, const GbarElement& b);
GbarElement gbar_inv(const Presentation& P, const GbarElement& a);
std::vector<GbarElement> gbar_elements(const Presentation& P);

struct FrobeniusConstants {
  int alpha = 0, beta = 0, gamma = 0, delta = 0, c = 0;
};

struct GbarGroup {
  int ell = 3;
  int ell_prime = 9;
  GaloisCase kind = GaloisCase::FullTorsion;
  Presentation pres;
  TorsionAction frob_l;
  std::optional<TorsionAction> frob_lprime;
  // coordinates of the torsion generators in the level ell' basis
  std::vector<Vec2> torsion_generators;
  std::vector<std::string> generator_names;
  FrobeniusConstants constants;

  std::uint64_t order() const;
};

// From the Frobenius matrices at levels ell and ell'. The level ell' matrix
// may be omitted only when there are no fixed points.
GbarGroup gbar_from_actions(int ell, const TorsionAction& A_l, const std::optional<TorsionAction>& A_lprime);
GbarGroup build_gbar(const Curve& E, int ell, std::uint64_t seed = kDefaultSeed);

struct Character {
  int ell = 3;
  std::vector<int> values;  // one per generator

  bool is_zero() const;
  Character scaled(int s) const;
  bool operator==(const Character& o) const = default;
};

std::vector<Character> enumerate_characters(const Presentation& P, int ell);
std::vector<Character> enumerate_characters(const GbarGroup& g);
// restriction to the torsion generators
Character restrict_to_torsion(const Character& c, const Presentation& P);

struct GaloisElement {
  Mat2 m;
  int chi = 0;
  int cyclotomic = 1;  // det mod 9
};

struct AbstractGaloisData {
  std::vector<Mat2> generators;
  std::vector<int> chi_on_generators;
  Vec2 chi_on_torsion = Vec2::Zero();
  bool has_ninth_root = false;
  bool unique_cubic_extension = false;
  std::vector<GaloisElement> closure;  // subgroup generated by (g_i, chi(g_i))
  std::vector<Mat2> matrices;          // its distinct matrices
};

AbstractGaloisData make_abstract(std::vector<Mat2> generators, std::vector<int> chi_on_generators,
                                 Vec2 chi_on_torsion, bool has_ninth_root, bool unique_cubic_extension);
AbstractGaloisData load_abstract(const nlohmann::json& data);
// E[9] semidirect the cyclic group generated by a single generator
Presentation abstract_presentation(const AbstractGaloisData& d);

}  // namespace massey
