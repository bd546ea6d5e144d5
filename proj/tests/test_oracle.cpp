#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "massey/oracle.hpp"

using namespace massey;

namespace {

struct Triple {
  const Character *a, *b, *c;
};

std::vector<Triple> sample_triples(const std::vector<Character>& cs, std::size_t n, std::uint64_t seed) {
  std::vector<Triple> out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, cs.size() - 1);
  for (std::size_t i = 0; i < n; ++i) out.push_back({&cs[pick(rng)], &cs[pick(rng)], &cs[pick(rng)]});
  return out;
}

std::vector<Triple> all_triples(const std::vector<Character>& cs) {
  std::vector<Triple> out;
  for (const auto& a : cs)
    for (const auto& b : cs)
      for (const auto& c : cs) out.push_back({&a, &b, &c});
  return out;
}

Character chr(int ell, std::vector<int> v) { return {ell, std::move(v)}; }

void expect_lift_sound(const Lift& L, const Triple& t, const Presentation& P, bool modulo_center) {
  ASSERT_TRUE(L.found);
  EXPECT_TRUE(lift_is_homomorphism(L.images, P, modulo_center));
  for (int g = 0; g < P.generator_count(); ++g) {
    EXPECT_EQ(L.images[g].a1, t.a->values[g]);
    EXPECT_EQ(L.images[g].a2, t.b->values[g]);
    EXPECT_EQ(L.images[g].a3, t.c->values[g]);
    if (modulo_center) EXPECT_EQ(L.images[g].v, 0);
  }
}

}  // namespace

TEST(Oracle, ZeroCharacterExamples) {
  const auto g = fixtures::gbar(fixtures::kFull3[0]);
  const auto cs = enumerate_characters(g);
  const Character zero = chr(3, {0, 0, 0});
  for (const auto& c : cs) {
    EXPECT_TRUE(oracle_cup(zero, c, g.pres));
    EXPECT_TRUE(oracle_cup(c, zero, g.pres));
    EXPECT_TRUE(oracle_zero_lift(c, zero, c, g.pres).found);
  }
  EXPECT_TRUE(oracle_defining_system(zero, zero, zero, g.pres).found);
}

TEST(Oracle, SplitIndependentCupFails) {
  const auto g = fixtures::gbar(fixtures::kSplit[1]);
  ASSERT_EQ(g.ell, 5);
  EXPECT_FALSE(oracle_cup(chr(5, {1, 0}), chr(5, {0, 1}), g.pres));
  EXPECT_TRUE(oracle_cup(chr(5, {1, 2}), chr(5, {2, 4}), g.pres));
}

TEST(Oracle, UnipotentConstruction) {
  // x1 = x3 = 0, phi1 = phi3 = 1, chi2 kills m' and Phi
  const auto g = fixtures::gbar(fixtures::kUnipotent[1]);
  ASSERT_EQ(g.ell, 5);
  const auto c1 = chr(5, {0, 0, 1}), c2 = chr(5, {0, 1, 0});
  EXPECT_TRUE(oracle_defining_system(c1, c2, c1, g.pres).found);
  EXPECT_FALSE(oracle_zero_lift(c1, c2, c1, g.pres).found);
  EXPECT_FALSE(oracle_zero_lift(c1, c2, c1, g.pres, SearchMode::Exhaustive).found);
  // every triple is defined in the unipotent case
  const auto cs = enumerate_characters(g);
  for (const auto& t : sample_triples(cs, 200, 3))
    EXPECT_TRUE(oracle_defining_system(*t.a, *t.b, *t.c, g.pres).found);
}

TEST(Oracle, ModesAgree) {
  std::vector<fixtures::CurveFixture> fs = {fixtures::kFull3[0], fixtures::kFull3Scalar, fixtures::kSplit[0],
                                            fixtures::kUnipotent[0], fixtures::kSplit[1]};
  for (const auto& f : fs) {
    const auto g = fixtures::gbar(f);
    const auto cs = enumerate_characters(g);
    const auto ts = cs.size() <= 9 ? all_triples(cs) : sample_triples(cs, 400, f.p);
    for (const auto& t : ts) {
      for (bool center : {true, false}) {
        auto lin = center ? oracle_defining_system(*t.a, *t.b, *t.c, g.pres)
                          : oracle_zero_lift(*t.a, *t.b, *t.c, g.pres);
        auto ex = center ? oracle_defining_system(*t.a, *t.b, *t.c, g.pres, SearchMode::Exhaustive)
                         : oracle_zero_lift(*t.a, *t.b, *t.c, g.pres, SearchMode::Exhaustive);
        ASSERT_EQ(lin.found, ex.found) << f.p << " " << f.a << " " << f.b;
        if (lin.found) {
          expect_lift_sound(lin, t, g.pres, center);
          expect_lift_sound(ex, t, g.pres, center);
        }
      }
    }
  }
}

TEST(Oracle, NonemptyIsBothCups) {
  for (const auto& f : fixtures::all_curves()) {
    const auto g = fixtures::gbar(f);
    const auto cs = enumerate_characters(g);
    for (const auto& t : sample_triples(cs, 300, 11)) {
      const bool ne = oracle_defining_system(*t.a, *t.b, *t.c, g.pres).found;
      EXPECT_EQ(ne, oracle_cup(*t.a, *t.b, g.pres) && oracle_cup(*t.b, *t.c, g.pres));
      if (oracle_zero_lift(*t.a, *t.b, *t.c, g.pres).found) EXPECT_TRUE(ne);
    }
  }
}

TEST(Oracle, TorsionSubgroupNonemptyContainsZero) {
  for (const auto& f : {fixtures::kFull3[0], fixtures::kUnipotent[0]}) {
    const auto g = fixtures::gbar(f);
    const Presentation T = g.pres.torsion_subgroup();
    const auto cs = oracle_characters(T, 3);
    for (const auto& t : all_triples(cs))
      if (oracle_defining_system(*t.a, *t.b, *t.c, T).found) EXPECT_TRUE(oracle_zero_lift(*t.a, *t.b, *t.c, T).found);
  }
}

TEST(Oracle, ScalingInvariance) {
  for (const auto& f : {fixtures::kFull3[0], fixtures::kUnipotent[1], fixtures::kUnipotent[2]}) {
    const auto g = fixtures::gbar(f);
    const int l = g.ell;
    const auto cs = enumerate_characters(g);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> unit(1, l - 1);
    for (const auto& t : sample_triples(cs, 100, 9)) {
      const auto s = oracle_status(*t.a, *t.b, *t.c, g.pres);
      EXPECT_EQ(s, oracle_status(t.a->scaled(unit(rng)), t.b->scaled(unit(rng)), t.c->scaled(unit(rng)), g.pres));
    }
  }
}

TEST(Oracle, RejectsForeignCharacters) {
  const auto g = fixtures::gbar(fixtures::kFull3[0]);
  EXPECT_THROW(oracle_cup(chr(3, {1, 0}), chr(3, {1, 0, 0}), g.pres), Error);
}
