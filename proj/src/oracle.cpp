#include "massey/oracle.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace massey {

namespace {

int max_gen(const Word& w) {
  int m = -1;
  for (const auto& l : w) m = std::max(m, l.gen);
  return m;
}

// relators grouped by their highest generator
std::vector<std::vector<Word>> bucket_relators(const Presentation& P) {
  std::vector<std::vector<Word>> b(P.generator_count());
  for (auto& r : P.relators()) {
    int m = max_gen(r);
    if (m >= 0) b[m].push_back(std::move(r));
  }
  return b;
}

template <class T, class Mul, class Inv, class Ok>
bool dfs(std::size_t depth, const std::vector<std::vector<T>>& cand, const std::vector<std::vector<Word>>& rels,
         std::vector<T>& cur, const T& id, Mul mul, Inv inv, Ok ok) {
  if (depth == cand.size()) return true;
  for (const T& x : cand[depth]) {
    cur[depth] = x;
    bool good = true;
    for (const auto& r : rels[depth])
      if (!ok(evaluate_word(r, cur, id, mul, inv))) {
        good = false;
        break;
      }
    if (good && dfs(depth + 1, cand, rels, cur, id, mul, inv, ok)) return true;
  }
  return false;
}

void check_chars(const std::vector<const Character*>& cs, const Presentation& P) {
  for (const auto* c : cs)
    if (static_cast<int>(c->values.size()) != P.generator_count() || c->ell != cs[0]->ell)
      throw Error(ErrorCode::GroupMismatch, "character does not belong to this presentation");
}

// solve A x = b mod prime l, free variables set to zero
std::optional<std::vector<int>> solve_mod(std::vector<std::vector<std::int64_t>> A, std::vector<std::int64_t> b,
                                          int l) {
  const std::size_t rows = A.size(), cols = rows ? A[0].size() : 0;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && mod(A[p][c], l) == 0) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    const std::int64_t iv = inv_mod(mod(A[r][c], l), l);
    for (auto& x : A[r]) x = mod(x * iv, l);
    b[r] = mod(b[r] * iv, l);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const std::int64_t f = mod(A[i][c], l);
      if (!f) continue;
      for (std::size_t j = 0; j < cols; ++j) A[i][j] = mod(A[i][j] - f * A[r][j], l);
      b[i] = mod(b[i] - f * b[r], l);
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (mod(b[i], l) != 0) return std::nullopt;
  std::vector<int> x(cols, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = static_cast<int>(mod(b[i], l));
  return x;
}

U4Matrix eval_u4(const Word& w, const std::vector<U4Matrix>& im, int l) {
  return evaluate_word(w, im, u4_identity(l), u4_mul, u4_inv);
}

Lift search_u4(const Character& c1, const Character& c2, const Character& c3, const Presentation& P,
               SearchMode mode, bool modulo_center) {
  check_chars({&c1, &c2, &c3}, P);
  const int l = c1.ell, G = P.generator_count();
  auto base = [&](int g) { return U4Matrix::make(l, c1.values[g], c2.values[g], c3.values[g], 0, 0, 0); };

  if (mode == SearchMode::Exhaustive) {
    std::vector<std::vector<U4Matrix>> cand(G);
    for (int g = 0; g < G; ++g)
      for (int u = 0; u < l; ++u)
        for (int v = 0; v < (modulo_center ? 1 : l); ++v)
          for (int w = 0; w < l; ++w) {
            U4Matrix m = base(g);
            m.u = u, m.v = v, m.w = w;
            cand[g].push_back(m);
          }
    std::vector<U4Matrix> cur(G, u4_identity(l));
    const auto rels = bucket_relators(P);
    auto ok = [modulo_center](const U4Matrix& m) { return modulo_center ? mod_center(m).is_identity() : m.is_identity(); };
    Lift res;
    res.found = dfs(0, cand, rels, cur, u4_identity(l), u4_mul, u4_inv, ok);
    if (res.found) res.images = cur;
    return res;
  }

  // linearized
  const auto rels = P.relators();
  const int per = modulo_center ? 2 : 3;
  const int nvars = per * G;
  std::vector<U4Matrix> im0(G);
  for (int g = 0; g < G; ++g) im0[g] = base(g);
  auto set_var = [&](std::vector<U4Matrix>& im, int var, int val) {
    U4Matrix& m = im[var / per];
    switch (var % per) {
      case 0: m.u = val; break;
      case 1: (modulo_center ? m.w : m.v) = val; break;
      case 2: m.w = val; break;
    }
  };
  auto entries = [&](const U4Matrix& m) {
    std::vector<std::int64_t> e{m.u, m.w};
    if (!modulo_center) e.push_back(m.v);
    return e;
  };
  std::vector<std::vector<std::int64_t>> A;
  std::vector<std::int64_t> b;
  for (const auto& r : rels) {
    const U4Matrix B = eval_u4(r, im0, l);
    if (B.a1 || B.a2 || B.a3) throw Error(ErrorCode::InvalidData, "superdiagonal is not a homomorphism");
    const auto be = entries(B);
    std::vector<std::vector<std::int64_t>> cols;
    for (int var = 0; var < nvars; ++var) {
      auto im = im0;
      set_var(im, var, 1);
      const auto e = entries(eval_u4(r, im, l));
      std::vector<std::int64_t> d(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) d[i] = mod(e[i] - be[i], l);
      cols.push_back(d);
    }
    for (std::size_t i = 0; i < be.size(); ++i) {
      std::vector<std::int64_t> row(nvars);
      for (int var = 0; var < nvars; ++var) row[var] = cols[var][i];
      A.push_back(row);
      b.push_back(mod(-be[i], l));
    }
  }
  Lift res;
  const auto x = solve_mod(A, b, l);
  if (!x) return res;
  res.images = im0;
  for (int var = 0; var < nvars; ++var) set_var(res.images, var, (*x)[var]);
  if (!lift_is_homomorphism(res.images, P, modulo_center))
    throw std::logic_error("linearized lift failed direct check");
  res.found = true;
  return res;
}

}  // namespace

std::vector<Character> oracle_characters(const Presentation& P, int ell) {
  const int G = P.generator_count();
  const auto rels = P.relators();
  std::vector<Character> out;
  std::int64_t total = 1;
  for (int i = 0; i < G; ++i) total *= ell;
  for (std::int64_t code = 0; code < total; ++code) {
    Character c{ell, std::vector<int>(G)};
    std::int64_t t = code;
    for (int i = G - 1; i >= 0; --i) {
      c.values[i] = static_cast<int>(t % ell);
      t /= ell;
    }
    bool ok = true;
    for (const auto& r : rels) {
      const int s = evaluate_word<int>(
          r, c.values, 0, [ell](int a, int b) { return (a + b) % ell; }, [ell](int a) { return (ell - a) % ell; });
      if (s) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(std::move(c));
  }
  return out;
}

bool oracle_cup(const Character& chi1, const Character& chi2, const Presentation& P) {
  check_chars({&chi1, &chi2}, P);
  const int l = chi1.ell, G = P.generator_count();
  std::vector<std::vector<U3Matrix>> cand(G);
  for (int g = 0; g < G; ++g)
    for (int k = 0; k < l; ++k) cand[g].push_back(U3Matrix{l, chi1.values[g], chi2.values[g], k});
  std::vector<U3Matrix> cur(G, U3Matrix::identity(l));
  return dfs(0, cand, bucket_relators(P), cur, U3Matrix::identity(l), u3_mul, u3_inv,
             [](const U3Matrix& m) { return m.is_identity(); });
}

bool lift_is_homomorphism(const std::vector<U4Matrix>& images, const Presentation& P, bool modulo_center) {
  if (images.empty() && P.generator_count() > 0) return false;
  const int l = images.empty() ? 3 : images[0].ell;
  for (const auto& r : P.relators()) {
    const U4Matrix m = eval_u4(r, images, l);
    if (!(modulo_center ? mod_center(m).is_identity() : m.is_identity())) return false;
  }
  return true;
}

Lift oracle_defining_system(const Character& chi1, const Character& chi2, const Character& chi3,
                            const Presentation& P, SearchMode mode) {
  return search_u4(chi1, chi2, chi3, P, mode, true);
}

Lift oracle_zero_lift(const Character& chi1, const Character& chi2, const Character& chi3, const Presentation& P,
                      SearchMode mode) {
  return search_u4(chi1, chi2, chi3, P, mode, false);
}

MasseyStatus oracle_status(const Character& chi1, const Character& chi2, const Character& chi3,
                           const Presentation& P, SearchMode mode) {
  if (oracle_zero_lift(chi1, chi2, chi3, P, mode).found) return MasseyStatus::ContainsZero;
  if (oracle_defining_system(chi1, chi2, chi3, P, mode).found) return MasseyStatus::NonVanishing;
  return MasseyStatus::Empty;
}

}  // namespace massey
