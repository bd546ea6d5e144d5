#include "massey/galois.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace massey {

const char* case_name(GaloisCase c) {
  switch (c) {
    case GaloisCase::FullTorsion: return "FullTorsion";
    case GaloisCase::NoFixedPoints: return "NoFixedPoints";
    case GaloisCase::SplitLine: return "SplitLine";
    case GaloisCase::UnipotentLine: return "UnipotentLine";
  }
  return "?";
}

GaloisCase classify_case(const TorsionAction& A) {
  const int l = A.n;
  if (det(A.m, l) == 0) throw Error(ErrorCode::NotInvertible, "Frobenius matrix is singular");
  Mat2 B = reduce(A.m - Mat2::Identity(), l);
  if (B.isZero()) return GaloisCase::FullTorsion;
  int kernel = 0;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (apply(B, vec2(i, j), l).isZero()) ++kernel;
  if (kernel == 1) return GaloisCase::NoFixedPoints;
  if (mul(B, B, l).isZero()) return GaloisCase::UnipotentLine;
  return GaloisCase::SplitLine;
}

std::vector<Word> Presentation::relators() const {
  std::vector<Word> out;
  for (int i = 0; i < rank; ++i) out.push_back({{i, torsion_order}});
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) out.push_back({{i, 1}, {j, 1}, {i, -1}, {j, -1}});
  if (has_top()) {
    const int f = top_index();
    out.push_back({{f, top_order}});
    for (int i = 0; i < rank; ++i) {
      Word w{{f, 1}, {i, 1}, {f, -1}};
      for (int j = rank - 1; j >= 0; --j) {
        int x = static_cast<int>(mod(action(j, i), torsion_order));
        if (x) w.push_back({j, -x});
      }
      out.push_back(w);
    }
  }
  return out;
}

Presentation Presentation::torsion_subgroup() const {
  Presentation p = *this;
  p.top_order = 0;
  p.action = Mat2::Identity();
  return p;
}

GbarElement gbar_identity() { return {}; }

GbarElement gbar_generator(const Presentation& P, int g) {
  GbarElement x;
  if (g < P.rank)
    x.t(g) = 1 % P.torsion_order;
  else
    x.e = 1 % P.top_order;
  return x;
}

namespace {

Vec2 act(const Presentation& P, int e, const Vec2& t) {
  Mat2 X = P.action;
  if (P.rank < 2) X = mat2(P.action(0, 0), 0, 0, 1);
  return apply(pow(X, static_cast<std::uint64_t>(e), P.torsion_order), t, P.torsion_order);
}

}  // namespace

GbarElement gbar_mul(const Presentation& P, const GbarElement& a, const GbarElement& b) {
  GbarElement r;
  r.t = reduce(a.t + act(P, a.e, b.t), P.torsion_order);
  r.e = P.has_top() ? static_cast<int>(mod(a.e + b.e, P.top_order)) : 0;
  return r;
}

GbarElement gbar_inv(const Presentation& P, const GbarElement& a) {
  // (t, e)^-1 = (-X^{-e} t, -e)
  GbarElement r;
  r.e = P.has_top() ? static_cast<int>(mod(-a.e, P.top_order)) : 0;
  r.t = reduce(-act(P, r.e, a.t), P.torsion_order);
  return r;
}

std::vector<GbarElement> gbar_elements(const Presentation& P) {
  std::vector<GbarElement> out;
  const int n = P.torsion_order;
  const int n0 = P.rank >= 1 ? n : 1, n1 = P.rank >= 2 ? n : 1;
  const int tops = P.has_top() ? P.top_order : 1;
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j)
      for (int e = 0; e < tops; ++e) out.push_back({vec2(i, j), e});
  return out;
}

std::uint64_t GbarGroup::order() const {
  std::uint64_t o = 1;
  for (int i = 0; i < pres.rank; ++i) o *= pres.torsion_order;
  if (pres.has_top()) o *= pres.top_order;
  return o;
}

namespace {

std::vector<Vec2> span_of(const Mat2& M, int n) {
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  std::vector<Vec2> out;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      Vec2 v = reduce(M.col(0) * s + M.col(1) * t, n);
      if (seen.insert({v(0), v(1)}).second) out.push_back(v);
    }
  return out;
}

bool contains(const std::vector<Vec2>& s, const Vec2& v) {
  return std::find(s.begin(), s.end(), v) != s.end();
}

}  // namespace

GbarGroup gbar_from_actions(int ell, const TorsionAction& A_l, const std::optional<TorsionAction>& A_lprime) {
  if (ell < 3 || !fp::is_prime(ell)) throw Error(ErrorCode::InvalidArgument, "ell must be an odd prime");
  if (A_l.n != ell) throw Error(ErrorCode::InvalidArgument, "level ell matrix has the wrong level");
  GbarGroup g;
  g.ell = ell;
  g.ell_prime = ell == 3 ? 9 : ell;
  const int L = g.ell_prime;
  g.kind = classify_case(A_l);
  g.frob_l = A_l;
  g.pres.torsion_order = L;
  g.pres.top_order = L;

  if (g.kind == GaloisCase::NoFixedPoints) {
    g.frob_lprime = A_lprime;
    g.pres.torsion_order = 1;
    g.pres.rank = 0;
    g.generator_names = {"Phi"};
    return g;
  }

  TorsionAction Ap = A_lprime ? *A_lprime : A_l;
  if (Ap.n != L) throw Error(ErrorCode::InvalidArgument, "level ell' matrix has the wrong level");
  if (classify_case(reduce_level(Ap, ell)) != g.kind)
    throw Error(ErrorCode::CaseMismatch, "level ell and ell' matrices disagree");
  g.frob_lprime = Ap;
  const Mat2 A = reduce(Ap.m, L);
  if (g.kind != GaloisCase::SplitLine && !is_identity(pow(A, L, L), L))
    throw Error(ErrorCode::CaseMismatch, "Frobenius does not have ell'-power order on E[ell']");

  switch (g.kind) {
    case GaloisCase::FullTorsion: {
      g.pres.rank = 2;
      g.pres.action = A;
      g.torsion_generators = {vec2(1, 0), vec2(0, 1)};
      g.generator_names = {"P", "Q", "Phi"};
      break;
    }
    case GaloisCase::SplitLine: {
      // torsion quotient E[L] / (Phi^L - 1) E[L]
      const auto N = span_of(reduce(pow(A, L, L) - Mat2::Identity(), L), L);
      if (static_cast<int>(N.size()) != L) throw Error(ErrorCode::CaseMismatch, "torsion quotient is not cyclic of order ell'");
      std::optional<Vec2> m;
      for (int i = 0; i < L && !m; ++i)
        for (int j = 0; j < L && !m; ++j) {
          Vec2 v = vec2(i, j);
          int d = 1;
          while (d < L && !contains(N, reduce(v * d, L))) ++d;
          if (d == L) m = v;
        }
      if (!m) throw Error(ErrorCode::CaseMismatch, "no generator of the torsion quotient");
      int s = -1;
      for (int t = 0; t < L; ++t)
        if (contains(N, reduce(apply(A, *m, L) - *m * t, L))) s = t;
      if (s < 0 || s % ell != 1) throw Error(ErrorCode::CaseMismatch, "Frobenius is not 1 + ell*alpha on the quotient");
      g.pres.rank = 1;
      g.pres.action = mat2(s, 0, 0, 1);
      g.torsion_generators = {*m};
      g.generator_names = {"m", "Phi"};
      g.constants.alpha = (s - 1) / ell;
      break;
    }
    case GaloisCase::UnipotentLine: {
      const Mat2 B = reduce(A - Mat2::Identity(), L);
      std::optional<Vec2> m;
      for (int i = 0; i < L && !m; ++i)
        for (int j = 0; j < L && !m; ++j)
          if (!reduce(apply(B, vec2(i, j), L), ell).isZero()) m = vec2(i, j);
      const Vec2 mp = apply(B, *m, L);
      Mat2 C;
      C.col(0) = mp;
      C.col(1) = *m;
      auto Ci = inverse(C, L);
      if (!Ci) throw Error(ErrorCode::CaseMismatch, "normalized basis is degenerate");
      const Mat2 X = mul(mul(*Ci, A, L), C, L);
      const Mat2 X0 = reduce(X, ell);
      if (X0 != mat2(1, 1, 0, 1)) throw Error(ErrorCode::CaseMismatch, "normalized Frobenius is not (1 1; 0 1) mod ell");
      g.pres.rank = 2;
      g.pres.action = X;
      g.torsion_generators = {mp, *m};
      g.generator_names = {"m'", "m", "Phi"};
      g.constants.alpha = static_cast<int>((X(0, 0) - 1) / ell);
      g.constants.beta = static_cast<int>((X(0, 1) - 1) / ell);
      g.constants.gamma = static_cast<int>(X(1, 0) / ell);
      g.constants.delta = static_cast<int>((X(1, 1) - 1) / ell);
      g.constants.c = ell == 3 ? g.constants.gamma : 0;
      break;
    }
    case GaloisCase::NoFixedPoints:
      break;
  }
  return g;
}

GbarGroup build_gbar(const Curve& E, int ell, std::uint64_t seed) {
  TorsionAction A_l = frobenius_matrix(torsion_basis(E, ell, seed));
  if (classify_case(A_l) == GaloisCase::NoFixedPoints) return gbar_from_actions(ell, A_l, std::nullopt);
  if (ell != 3) return gbar_from_actions(ell, A_l, A_l);
  TorsionAction A9 = frobenius_matrix(torsion_basis(E, 9, seed));
  return gbar_from_actions(3, reduce_level(A9, 3), A9);
}

bool Character::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](int v) { return v == 0; });
}

Character Character::scaled(int s) const {
  Character c = *this;
  for (auto& v : c.values) v = static_cast<int>(mod(static_cast<std::int64_t>(v) * s, ell));
  return c;
}

std::vector<Character> enumerate_characters(const Presentation& P, int ell) {
  const int G = P.generator_count();
  std::vector<Character> out;
  int total = 1;
  for (int i = 0; i < G; ++i) total *= ell;
  for (int code = 0; code < total; ++code) {
    Character c{ell, std::vector<int>(G)};
    int t = code;
    for (int i = G - 1; i >= 0; --i) {
      c.values[i] = t % ell;
      t /= ell;
    }
    bool ok = true;
    for (int i = 0; i < P.rank; ++i) ok = ok && (static_cast<std::int64_t>(P.torsion_order) * c.values[i]) % ell == 0;
    if (P.has_top()) {
      ok = ok && (static_cast<std::int64_t>(P.top_order) * c.values[P.top_index()]) % ell == 0;
      // c (X - I) = 0 on the torsion generators
      for (int i = 0; i < P.rank && ok; ++i) {
        std::int64_t s = -c.values[i];
        for (int j = 0; j < P.rank; ++j) s += P.action(j, i) * c.values[j];
        ok = mod(s, ell) == 0;
      }
    }
    if (ok) out.push_back(std::move(c));
  }
  return out;
}

std::vector<Character> enumerate_characters(const GbarGroup& g) { return enumerate_characters(g.pres, g.ell); }

Character restrict_to_torsion(const Character& c, const Presentation& P) {
  return {c.ell, std::vector<int>(c.values.begin(), c.values.begin() + P.rank)};
}

AbstractGaloisData make_abstract(std::vector<Mat2> generators, std::vector<int> chi_on_generators,
                                 Vec2 chi_on_torsion, bool has_ninth_root, bool unique_cubic_extension) {
  if (generators.size() != chi_on_generators.size())
    throw Error(ErrorCode::InvalidData, "chi_on_generators must have one value per generator");
  AbstractGaloisData d;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    Mat2 g = reduce(generators[i], 9);
    if (det(g, 3) == 0)
      throw Error(ErrorCode::NotInvertible, "generators[" + std::to_string(i) + "] is not invertible mod 9");
    if (!is_identity(reduce(g, 3), 3))
      throw Error(ErrorCode::NotCongruentIdentity, "generators[" + std::to_string(i) + "] is not congruent to I mod 3");
    d.generators.push_back(g);
    d.chi_on_generators.push_back(static_cast<int>(mod(chi_on_generators[i], 3)));
  }
  d.chi_on_torsion = reduce(chi_on_torsion, 3);
  d.has_ninth_root = has_ninth_root;
  d.unique_cubic_extension = unique_cubic_extension;

  auto key = [](const Mat2& m, int c) {
    return std::make_tuple(m(0, 0), m(0, 1), m(1, 0), m(1, 1), c);
  };
  std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t, int>> seen;
  std::vector<std::pair<Mat2, int>> frontier{{reduce(Mat2::Identity(), 9), 0}};
  seen.insert(key(frontier[0].first, 0));
  while (!frontier.empty()) {
    std::vector<std::pair<Mat2, int>> next;
    for (const auto& [m, c] : frontier)
      for (std::size_t i = 0; i < d.generators.size(); ++i) {
        Mat2 nm = mul(m, d.generators[i], 9);
        int nc = (c + d.chi_on_generators[i]) % 3;
        if (seen.insert(key(nm, nc)).second) next.emplace_back(nm, nc);
      }
    frontier = std::move(next);
  }
  std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>> mats;
  for (const auto& [a, b, c, e, x] : seen) {
    Mat2 m = mat2(a, b, c, e);
    std::int64_t dt = det(m, 9);
    if (dt % 3 != 1) throw Error(ErrorCode::InvalidData, "closure element with det not 1 mod 3");
    d.closure.push_back({m, x, static_cast<int>(dt)});
    if (mats.insert({a, b, c, e}).second) d.matrices.push_back(m);
  }
  return d;
}

namespace {

std::int64_t json_int(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer()) throw Error(ErrorCode::InvalidData, where + ": expected an integer");
  return j.get<std::int64_t>();
}

bool json_bool(const nlohmann::json& data, const std::string& key) {
  if (!data.contains(key)) throw Error(ErrorCode::InvalidData, key + ": missing");
  if (!data[key].is_boolean()) throw Error(ErrorCode::InvalidData, key + ": expected a boolean");
  return data[key].get<bool>();
}

const nlohmann::json& json_array(const nlohmann::json& data, const std::string& key) {
  if (!data.contains(key)) throw Error(ErrorCode::InvalidData, key + ": missing");
  if (!data[key].is_array()) throw Error(ErrorCode::InvalidData, key + ": expected an array");
  return data[key];
}

}  // namespace

AbstractGaloisData load_abstract(const nlohmann::json& data) {
  if (!data.is_object()) throw Error(ErrorCode::InvalidData, "input must be a JSON object");
  std::vector<Mat2> gens;
  const auto& jg = json_array(data, "generators");
  for (std::size_t i = 0; i < jg.size(); ++i) {
    const std::string where = "generators[" + std::to_string(i) + "]";
    if (!jg[i].is_array() || jg[i].size() != 2) throw Error(ErrorCode::InvalidData, where + ": expected a 2x2 matrix");
    Mat2 m;
    for (int r = 0; r < 2; ++r) {
      const auto& row = jg[i][r];
      const std::string w = where + "[" + std::to_string(r) + "]";
      if (!row.is_array() || row.size() != 2) throw Error(ErrorCode::InvalidData, w + ": expected a row of 2 integers");
      for (int c = 0; c < 2; ++c) m(r, c) = json_int(row[c], w + "[" + std::to_string(c) + "]");
    }
    gens.push_back(m);
  }
  std::vector<int> chis;
  const auto& jc = json_array(data, "chi_on_generators");
  for (std::size_t i = 0; i < jc.size(); ++i)
    chis.push_back(static_cast<int>(json_int(jc[i], "chi_on_generators[" + std::to_string(i) + "]")));
  const auto& jt = json_array(data, "chi_on_torsion");
  if (jt.size() != 2) throw Error(ErrorCode::InvalidData, "chi_on_torsion: expected 2 integers");
  Vec2 t = vec2(json_int(jt[0], "chi_on_torsion[0]"), json_int(jt[1], "chi_on_torsion[1]"));
  return make_abstract(gens, chis, t, json_bool(data, "has_ninth_root"), json_bool(data, "unique_cubic_extension"));
}

Presentation abstract_presentation(const AbstractGaloisData& d) {
  if (d.generators.size() != 1)
    throw Error(ErrorCode::InvalidData, "a semidirect model needs exactly one generator");
  Presentation P;
  P.torsion_order = 9;
  P.rank = 2;
  P.top_order = static_cast<int>(d.closure.size());
  P.action = d.generators[0];
  return P;
}

}  // namespace massey
