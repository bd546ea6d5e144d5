#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "massey/massey.hpp"
#include "massey/oracle.hpp"

using namespace massey;

namespace {

Character chr(int ell, std::vector<int> v) { return {ell, std::move(v)}; }

bool proportional(const Character& a, const Character& b) {
  for (std::size_t i = 0; i < a.values.size(); ++i)
    for (std::size_t j = 0; j < a.values.size(); ++j)
      if (mod(a.values[i] * b.values[j] - a.values[j] * b.values[i], a.ell)) return false;
  return true;
}

bool torsion_zero(const Character& c) { return c.values[0] == 0 && c.values[1] == 0; }

AbstractGaloisData abstract(std::vector<Mat2> gens, std::vector<int> chis, Vec2 t, bool ninth, bool cubic) {
  return make_abstract(std::move(gens), std::move(chis), t, ninth, cubic);
}

// all triples for ell = 3, a seeded sample otherwise
void expect_oracle_agreement(const fixtures::CurveFixture& f, std::size_t sample) {
  const auto g = fixtures::gbar(f);
  const auto cs = enumerate_characters(g);
  auto check = [&](const Character& a, const Character& b, const Character& c) {
    const auto v = triple_verdict(a, b, c, g);
    ASSERT_EQ(v.status, oracle_status(a, b, c, g.pres)) << f.p << " " << f.a << " " << f.b;
    if (v.status == MasseyStatus::NonVanishing) EXPECT_FALSE(v.witness.is_null());
  };
  if (!sample) {
    for (const auto& a : cs)
      for (const auto& b : cs)
        for (const auto& c : cs) check(a, b, c);
    return;
  }
  std::mt19937_64 rng(f.p);
  std::uniform_int_distribution<std::size_t> pick(0, cs.size() - 1);
  for (std::size_t i = 0; i < sample; ++i) check(cs[pick(rng)], cs[pick(rng)], cs[pick(rng)]);
}

}  // namespace

TEST(Cup, Examples) {
  const auto split = fixtures::gbar(fixtures::kSplit[1]);
  EXPECT_TRUE(cup_vanishes(chr(5, {0, 0}), chr(5, {3, 1}), split));
  EXPECT_TRUE(cup_vanishes(chr(5, {1, 3}), chr(5, {2, 1}), split));
  EXPECT_FALSE(cup_vanishes(chr(5, {1, 0}), chr(5, {0, 1}), split));
  const auto uni = fixtures::gbar(fixtures::kUnipotent[1]);
  for (const auto& a : enumerate_characters(uni))
    for (const auto& b : enumerate_characters(uni)) EXPECT_TRUE(cup_vanishes(a, b, uni));
  EXPECT_THROW(cup_vanishes(chr(5, {1, 0}), chr(5, {1, 0, 0}), uni), Error);
  EXPECT_THROW(cup_vanishes(chr(3, {1, 0, 0}), chr(3, {1, 0, 0}), uni), Error);
}

TEST(Cup, AgreesWithOracle) {
  for (const auto& f : fixtures::all_curves()) {
    const auto g = fixtures::gbar(f);
    const auto cs = enumerate_characters(g);
    for (const auto& a : cs)
      for (const auto& b : cs) ASSERT_EQ(cup_vanishes(a, b, g), oracle_cup(a, b, g.pres)) << f.p;
  }
}

TEST(Triple, UnipotentExamples) {
  const auto g = fixtures::gbar(fixtures::kUnipotent[1]);
  const auto v = triple_verdict(chr(5, {0, 0, 1}), chr(5, {0, 1, 0}), chr(5, {0, 0, 1}), g);
  EXPECT_EQ(v.status, MasseyStatus::NonVanishing);
  EXPECT_EQ(v.witness["condition1"], 0);
  EXPECT_EQ(v.witness["condition2"], 3);  // -2 mod 5
  const auto chi = chr(5, {0, 1, 0});
  EXPECT_EQ(triple_verdict(chi, chi, chi, g).status, MasseyStatus::ContainsZero);
}

TEST(Triple, ZeroMiddleContainsZero) {
  for (const auto& f : fixtures::all_curves()) {
    const auto g = fixtures::gbar(f);
    const Character zero{g.ell, std::vector<int>(g.pres.generator_count(), 0)};
    for (const auto& a : enumerate_characters(g))
      EXPECT_EQ(triple_verdict(a, zero, a, g).status, MasseyStatus::ContainsZero);
  }
}

TEST(Triple, ScalarFrobeniusNeverMoves) {
  const auto g = fixtures::gbar(fixtures::kFull3Scalar);
  ASSERT_TRUE(is_scalar(g.pres.action, 9));
  const auto cs = enumerate_characters(g);
  for (const auto& a : cs)
    for (const auto& b : cs)
      for (const auto& c : cs) EXPECT_NE(triple_verdict(a, b, c, g).status, MasseyStatus::NonVanishing);
}

TEST(Triple, FullTorsionWitnesses) {
  for (const auto& f : fixtures::kFull3) {
    const auto g = fixtures::gbar(f);
    const auto cs = enumerate_characters(g);
    int found = 0;
    for (const auto& a : cs)
      for (const auto& b : cs)
        for (const auto& c : cs) {
          const auto v = triple_verdict(a, b, c, g);
          if (v.status != MasseyStatus::NonVanishing) continue;
          ++found;
          EXPECT_TRUE(proportional(a, b) && proportional(b, c));
          EXPECT_FALSE(torsion_zero(a) || torsion_zero(b) || torsion_zero(c));
          const Vec2 w = vec2(v.witness["a"][0], v.witness["a"][1]);
          EXPECT_TRUE(w(0) % 3 || w(1) % 3);
          EXPECT_EQ(mod(c.values[0] * w(0) + c.values[1] * w(1), 3), 0);
          EXPECT_FALSE(in_line(apply(g.frob_lprime->m, w, 9), w, 9));
        }
    EXPECT_GT(found, 0);
  }
}

TEST(Triple, AgreesWithOracleSmall) {
  for (const auto& f : fixtures::all_curves())
    if (f.ell == 3) expect_oracle_agreement(f, 0);
  for (const auto& f : fixtures::all_curves())
    if (f.ell > 3) expect_oracle_agreement(f, 300);
}

TEST(Triple, ScalingInvariance) {
  for (const auto& f : fixtures::all_curves()) {
    const auto g = fixtures::gbar(f);
    const auto cs = enumerate_characters(g);
    std::mt19937_64 rng(f.p);
    std::uniform_int_distribution<std::size_t> pick(0, cs.size() - 1);
    std::uniform_int_distribution<int> unit(1, g.ell - 1);
    for (int i = 0; i < 500; ++i) {
      const auto &a = cs[pick(rng)], &b = cs[pick(rng)], &c = cs[pick(rng)];
      EXPECT_EQ(triple_verdict(a, b, c, g).status,
                triple_verdict(a.scaled(unit(rng)), b.scaled(unit(rng)), c.scaled(unit(rng)), g).status);
    }
  }
}

TEST(Bockstein, Examples) {
  const auto split = gbar_from_actions(3, {3, mat2(1, 0, 0, 2)}, TorsionAction{9, mat2(1, 0, 0, 2)});
  ASSERT_EQ(split.constants.alpha, 0);
  EXPECT_TRUE(bockstein_vanishes(chr(3, {0, 0}), split));
  EXPECT_TRUE(bockstein_vanishes(chr(3, {1, 0}), split));
  // Phi acts as 7 on the quotient: 6 v = 0 mod 9 forces v = 0 mod 3
  const auto twisted = fixtures::gbar(fixtures::kSplit[0]);
  ASSERT_EQ(twisted.constants.alpha, 2);
  EXPECT_FALSE(bockstein_vanishes(chr(3, {1, 0}), twisted));
  EXPECT_TRUE(bockstein_vanishes(chr(3, {0, 1}), twisted));
  EXPECT_THROW(bockstein_vanishes(chr(5, {1, 0}), fixtures::gbar(fixtures::kSplit[1])), Error);
}

TEST(Bockstein, ImpliesContainsZero) {
  for (const auto& f : fixtures::kFull3) {
    const auto g = fixtures::gbar(f);
    for (const auto& c : enumerate_characters(g))
      if (bockstein_vanishes(c, g)) EXPECT_EQ(triple_verdict(c, c, c, g).status, MasseyStatus::ContainsZero);
  }
}

TEST(KernelLineCheck, ScalarClosure) {
  auto d = abstract({mat2(4, 0, 0, 4)}, {0}, vec2(1, 0), false, false);
  EXPECT_EQ(thm52_check(d).status, MasseyStatus::ContainsZero);
}

TEST(KernelLineCheck, ZeroRestriction) {
  auto d = abstract({mat2(1, 3, 0, 1)}, {1}, vec2(0, 0), false, false);
  EXPECT_EQ(thm52_check(d).status, MasseyStatus::ContainsZero);
}

TEST(KernelLineCheck, MovedLineMatchesOracle) {
  for (int chi_gen : {0, 1}) {
    auto d = abstract({mat2(1, 3, 0, 1)}, {chi_gen}, vec2(1, 0), true, false);
    const auto v = thm52_check(d);
    ASSERT_EQ(v.status, MasseyStatus::NonVanishing);
    EXPECT_EQ(v.reason, "condition-1");
    // semidirect model E[9] x| <sigma>
    const Presentation P = abstract_presentation(d);
    const Character chi = chr(3, {1, 0, chi_gen});
    EXPECT_EQ(oracle_status(chi, chi, chi, P), MasseyStatus::NonVanishing);
  }
}

TEST(KernelLineCheck, ConditionTwo) {
  // diag(4, 1) fixes every line in the kernel but moves the others by a non-multiple
  auto d = abstract({mat2(4, 0, 0, 1), Mat2::Identity()}, {0, 1}, vec2(0, 1), false, false);
  const auto v = thm52_check(d);
  EXPECT_EQ(v.status, MasseyStatus::NonVanishing);
  EXPECT_EQ(v.reason, "condition-2");
  d.has_ninth_root = true;
  EXPECT_EQ(thm52_check(d).status, MasseyStatus::ContainsZero);
}

TEST(ExistenceCheck, Examples) {
  auto r = thm11_check(abstract({mat2(1, 3, 0, 1)}, {0}, vec2(1, 0), true, true));
  EXPECT_TRUE(r.exists_nonvanishing);
  EXPECT_EQ(r.branch, "i");
  r = thm11_check(abstract({mat2(4, 0, 0, 4)}, {0}, vec2(1, 0), true, false));
  EXPECT_FALSE(r.exists_nonvanishing);
  EXPECT_EQ(r.branch, "none");
  r = thm11_check(abstract({mat2(4, 0, 0, 4)}, {0}, vec2(1, 0), false, true));
  EXPECT_EQ(r.branch, "none");
  r = thm11_check(abstract({mat2(4, 0, 0, 4)}, {0}, vec2(1, 0), false, false));
  EXPECT_EQ(r.branch, "ii");
}

TEST(ExistenceCheck, FiniteFieldFlagsNeverNonVanishing) {
  for (const Mat2& s : {mat2(1, 0, 0, 1), mat2(4, 0, 0, 4), mat2(7, 0, 0, 7)})
    for (bool ninth : {false, true})
      for (int c = 0; c < 3; ++c) EXPECT_FALSE(thm11_check(abstract({s}, {c}, vec2(1, 2), ninth, true)).exists_nonvanishing);
}
