#include "massey/massey.hpp"

#include <algorithm>

namespace massey {

const char* status_name(MasseyStatus s) {
  switch (s) {
    case MasseyStatus::Empty: return "Empty";
    case MasseyStatus::ContainsZero: return "ContainsZero";
    case MasseyStatus::NonVanishing: return "NonVanishing";
  }
  return "?";
}

namespace {

void check_character(const Character& c, const GbarGroup& g) {
  if (c.ell != g.ell || static_cast<int>(c.values.size()) != g.pres.generator_count())
    throw Error(ErrorCode::GroupMismatch, "character does not belong to this group");
}

bool proportional(const std::vector<int>& a, const std::vector<int>& b, int ell) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (mod(static_cast<std::int64_t>(a[i]) * b[j] - static_cast<std::int64_t>(a[j]) * b[i], ell) != 0)
        return false;
  return true;
}

nlohmann::ordered_json vec_json(const Vec2& v) { return {v(0), v(1)}; }

nlohmann::ordered_json mat_json(const Mat2& m) {
  return {{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}};
}

MasseyVerdict verdict(MasseyStatus s, std::string reason, nlohmann::ordered_json w = nullptr) {
  return {s, std::move(reason), std::move(w)};
}

// points of E[9] - 3E[9], coordinates mod 9 in canonical order
std::vector<Vec2> primitive_points() {
  std::vector<Vec2> out;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      if (i % 3 || j % 3) out.push_back(vec2(i, j));
  return out;
}

std::int64_t pair_value(const Vec2& chi, const Vec2& a) { return mod(chi(0) * a(0) + chi(1) * a(1), 3); }

}  // namespace

bool cup_vanishes(const Character& chi1, const Character& chi2, const GbarGroup& g) {
  check_character(chi1, g);
  check_character(chi2, g);
  switch (g.kind) {
    case GaloisCase::UnipotentLine:
    case GaloisCase::NoFixedPoints:
      return true;
    case GaloisCase::SplitLine:
    case GaloisCase::FullTorsion:
      return proportional(chi1.values, chi2.values, g.ell);
  }
  return true;
}

MasseyVerdict triple_verdict(const Character& chi1, const Character& chi2, const Character& chi3,
                             const GbarGroup& g) {
  check_character(chi3, g);
  if (!cup_vanishes(chi1, chi2, g) || !cup_vanishes(chi2, chi3, g))
    return verdict(MasseyStatus::Empty, "cup-product-nonzero");
  if (chi1.is_zero() || chi2.is_zero() || chi3.is_zero())
    return verdict(MasseyStatus::ContainsZero, "zero-character");
  const int l = g.ell;
  switch (g.kind) {
    case GaloisCase::NoFixedPoints:
      return verdict(MasseyStatus::ContainsZero, "no-fixed-points");
    case GaloisCase::SplitLine:
      return verdict(MasseyStatus::ContainsZero, "split-line");
    case GaloisCase::UnipotentLine: {
      const int mi = 1, fi = g.pres.top_index();
      const std::int64_t x1 = chi1.values[mi], x2 = chi2.values[mi], x3 = chi3.values[mi];
      const std::int64_t f1 = chi1.values[fi], f2 = chi2.values[fi], f3 = chi3.values[fi];
      const std::int64_t c = g.constants.c;
      const std::int64_t r1 = mod((f2 * x3 - f3 * x2) * x1 - (f1 * x2 - f2 * x1) * x3, l);
      const std::int64_t r2 = mod((f2 * x3 - f3 * x2) * f1 - (f1 * x2 - f2 * x1) * f3 - c * x1 * x2 * x3, l);
      nlohmann::ordered_json w = {{"x", {x1, x2, x3}}, {"phi", {f1, f2, f3}}, {"c", c},
                                  {"condition1", r1}, {"condition2", r2}};
      if (r1 == 0 && r2 == 0) return verdict(MasseyStatus::ContainsZero, "unipotent-conditions-hold");
      return verdict(MasseyStatus::NonVanishing, "unipotent-conditions-fail", w);
    }
    case GaloisCase::FullTorsion: {
      if (l > 3) return verdict(MasseyStatus::ContainsZero, "full-torsion-ell-above-3");
      // by the cup conditions all three are multiples of chi3
      const Vec2 chibar = vec2(chi3.values[0], chi3.values[1]);
      if (reduce(chibar, 3).isZero()) return verdict(MasseyStatus::ContainsZero, "torsion-restriction-zero");
      const Mat2& A = g.pres.action;
      for (const Vec2& a : primitive_points()) {
        if (pair_value(chibar, a) != 0) continue;
        const Vec2 fa = apply(A, a, 9);
        if (!in_line(fa, a, 9))
          return verdict(MasseyStatus::NonVanishing, "kernel-line-moved",
                         {{"a", vec_json(a)}, {"phi_a", vec_json(fa)}});
      }
      return verdict(MasseyStatus::ContainsZero, "kernel-lines-fixed");
    }
  }
  return verdict(MasseyStatus::ContainsZero, "");
}

bool bockstein_vanishes(const Character& chi, const Presentation& P, int ell) {
  if (ell != 3) throw Error(ErrorCode::WrongPrime, "Bockstein check needs ell = 3");
  const int G = P.generator_count();
  const auto rels = P.relators();
  int total = 1;
  for (int i = 0; i < G; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    std::vector<int> lift(G);
    int t = code;
    for (int i = 0; i < G; ++i) {
      lift[i] = static_cast<int>(mod(chi.values[i] + 3 * (t % 3), 9));
      t /= 3;
    }
    bool ok = true;
    for (const auto& r : rels) {
      int s = evaluate_word<int>(
          r, lift, 0, [](int a, int b) { return (a + b) % 9; }, [](int a) { return (9 - a) % 9; });
      if (s != 0) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool bockstein_vanishes(const Character& chi, const GbarGroup& g) {
  check_character(chi, g);
  return bockstein_vanishes(chi, g.pres, g.ell);
}

MasseyVerdict thm52_check(const AbstractGaloisData& d) {
  const Vec2 chibar = d.chi_on_torsion;
  if (reduce(chibar, 3).isZero()) return verdict(MasseyStatus::ContainsZero, "torsion-restriction-zero");
  std::vector<Vec2> kernel_points, outside;
  for (const Vec2& a : primitive_points()) (pair_value(chibar, a) == 0 ? kernel_points : outside).push_back(a);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      if (!(i % 3 || j % 3) && pair_value(chibar, vec2(i, j)) != 0) outside.push_back(vec2(i, j));

  // condition (1)
  for (const Vec2& a : kernel_points)
    for (const Mat2& s : d.matrices) {
      const Vec2 sa = apply(s, a, 9);
      if (!in_line(sa, a, 9))
        return verdict(MasseyStatus::NonVanishing, "condition-1",
                       {{"a", vec_json(a)}, {"sigma", mat_json(s)}, {"sigma_a", vec_json(sa)}});
    }

  // condition (2)
  std::vector<const GaloisElement*> kf;
  for (const auto& e : d.closure)
    if (e.chi == 0) kf.push_back(&e);
  const bool index3 = kf.size() * 3 == d.closure.size();
  std::vector<const GaloisElement*> iotas;
  for (const auto* e : kf)
    if (e->cyclotomic == 4) iotas.push_back(e);
  if (index3 && !d.has_ninth_root && !iotas.empty()) {
    bool holds = true;
    for (const Vec2& a : kernel_points) {
      for (const Vec2& b : outside) {
        for (const auto* io : iotas) {
          const Vec2 img = reduce(apply(io->m, b, 9) - b * 4, 9);
          if (in_line(img, a, 9)) {
            holds = false;
            break;
          }
        }
        if (!holds) break;
      }
      if (!holds) break;
    }
    if (holds)
      return verdict(MasseyStatus::NonVanishing, "condition-2",
                     {{"iota", mat_json(iotas.front()->m)}, {"kernel_index", 3}});
  }
  return verdict(MasseyStatus::ContainsZero, "conditions-fail");
}

Thm11Result thm11_check(const AbstractGaloisData& d) {
  Thm11Result r;
  for (const Mat2& m : d.matrices)
    if (!is_scalar(m, 9)) {
      r.exists_nonvanishing = true;
      r.branch = "i";
      r.witness = {{"non_scalar", mat_json(m)}};
      return r;
    }
  if (!d.has_ninth_root && !d.unique_cubic_extension) {
    r.exists_nonvanishing = true;
    r.branch = "ii";
    return r;
  }
  r.branch = "none";
  return r;
}

}  // namespace massey
