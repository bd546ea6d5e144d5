#include "massey/ec.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <string>

namespace massey {

std::uint64_t Curve::q() const {
  auto s = base->size();
  if (!s) throw Error(ErrorCode::FieldTooLarge, "base field order exceeds 64 bits");
  return *s;
}

Curve curve_new(FieldPtr base, const FieldElement& a, const FieldElement& b) {
  const Residue p = base->characteristic();
  if (p == 2 || p == 3) throw Error(ErrorCode::BadCharacteristic, "characteristic must be at least 5");
  if (a.field_ptr() != base.get() || b.field_ptr() != base.get())
    throw Error(ErrorCode::FieldMismatch, "coefficients not in the base field");
  FieldElement disc = base->from_int(4) * a * a * a + base->from_int(27) * b * b;
  if (disc.is_zero()) throw Error(ErrorCode::SingularCurve, "4a^3 + 27b^2 = 0");
  FieldElement j = base->from_int(1728) * base->from_int(4) * a * a * a * disc.inverse();
  return Curve{std::move(base), a, b, disc, j};
}

Curve curve_from_ints(Residue p, std::int64_t a, std::int64_t b) {
  auto F = make_field(p, 1);
  return curve_new(F, F->from_int(a), F->from_int(b));
}

Curve igusa_curve(FieldPtr base, std::int64_t t0) {
  FieldElement t = base->from_int(t0);
  FieldElement d = base->from_int(4) * (t - base->from_int(1728));
  if (d.is_zero()) throw Error(ErrorCode::InvalidArgument, "t0 = 1728 in the base field");
  FieldElement s = -(base->from_int(27) * t * d.inverse());
  return curve_new(base, s, s);
}

bool CurvePoint::operator==(const CurvePoint& o) const {
  if (infinity || o.infinity) return infinity == o.infinity;
  return x == o.x && y == o.y;
}

bool CurvePoint::operator<(const CurvePoint& o) const {
  if (infinity || o.infinity) return infinity && !o.infinity;
  if (!(x == o.x)) return x < o.x;
  return y < o.y;
}

bool CurveModel::on_curve(const CurvePoint& P) const {
  if (P.infinity) return true;
  return P.y * P.y == rhs(P.x);
}

CurveModel base_model(const Curve& E) { return {E.base, E.a, E.b}; }

namespace {

FieldElement embed(const Curve& E, const ExtField& L, const FieldElement& x,
                   const std::optional<FieldElement>& gen) {
  const auto& c = x.coeffs();
  if (!gen) return L.from_int(static_cast<std::int64_t>(c[0]));
  FieldElement r = L.zero();
  for (std::size_t i = c.size(); i-- > 0;) r = r * *gen + L.from_int(static_cast<std::int64_t>(c[i]));
  (void)E;
  return r;
}

std::optional<FieldElement> generator_image(const Curve& E, const ExtField& L) {
  if (E.base_degree() == 1) return std::nullopt;
  auto roots = roots_in_field(E.base->modulus(), L);
  if (roots.empty()) throw Error(ErrorCode::FieldMismatch, "base field does not embed");
  return roots.front();
}

void check_field(const CurveModel& M, const CurvePoint& P) {
  if (!P.infinity && P.x.field_ptr() != M.field.get())
    throw Error(ErrorCode::FieldMismatch, "point lives over a different field");
}

}  // namespace

CurveModel extend_model(const Curve& E, int k) {
  if (k == 1) return base_model(E);
  const int deg = E.base_degree() * k;
  if (deg > kMaxExtensionDegree) throw Error(ErrorCode::ExtensionCapExceeded, "extension degree above 96");
  FieldPtr L = make_field(E.characteristic(), deg);
  auto gen = generator_image(E, *L);
  return {L, embed(E, *L, E.a, gen), embed(E, *L, E.b, gen)};
}

CurvePoint point_neg(const CurveModel& M, const CurvePoint& P) {
  check_field(M, P);
  if (P.infinity) return P;
  return CurvePoint::affine(P.x, -P.y);
}

CurvePoint point_add(const CurveModel& M, const CurvePoint& P, const CurvePoint& Q) {
  check_field(M, P);
  check_field(M, Q);
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  const ExtField& F = *M.field;
  FieldElement lambda;
  if (P.x == Q.x) {
    if (!(P.y == Q.y) || P.y.is_zero()) return CurvePoint::at_infinity();
    lambda = (F.from_int(3) * P.x * P.x + M.a) * (F.from_int(2) * P.y).inverse();
  } else {
    lambda = (Q.y - P.y) * (Q.x - P.x).inverse();
  }
  FieldElement x3 = lambda * lambda - P.x - Q.x;
  FieldElement y3 = lambda * (P.x - x3) - P.y;
  return CurvePoint::affine(std::move(x3), std::move(y3));
}

CurvePoint scalar_mul(const CurveModel& M, std::int64_t m, const CurvePoint& P) {
  CurvePoint base = m < 0 ? point_neg(M, P) : P;
  std::uint64_t e = m < 0 ? static_cast<std::uint64_t>(-m) : static_cast<std::uint64_t>(m);
  CurvePoint r = CurvePoint::at_infinity();
  while (e) {
    if (e & 1) r = point_add(M, r, base);
    e >>= 1;
    if (e) base = point_add(M, base, base);
  }
  return r;
}

std::vector<CurvePoint> all_points(const CurveModel& M) {
  std::vector<CurvePoint> out{CurvePoint::at_infinity()};
  auto elems = M.field->elements();
  std::map<FieldElement, std::vector<FieldElement>> roots;
  for (const auto& y : elems) roots[y * y].push_back(y);
  for (const auto& x : elems) {
    auto it = roots.find(M.rhs(x));
    if (it == roots.end()) continue;
    for (const auto& y : it->second) out.push_back(CurvePoint::affine(x, y));
  }
  return out;
}

std::uint64_t count_points(const Curve& E) {
  auto qs = E.base->size();
  if (!qs || *qs > kMaxCountField)
    throw Error(ErrorCode::FieldTooLarge, "point counting limited to q <= 50021");
  const std::uint64_t q = *qs;
  std::uint64_t n = 1;
  if (E.base_degree() == 1) {
    const Residue p = E.characteristic();
    std::vector<int> chi(p, -1);
    chi[0] = 0;
    for (Residue y = 1; y < p; ++y) chi[y * y % p] = 1;
    const Residue a = E.a.coeffs()[0], b = E.b.coeffs()[0];
    for (Residue x = 0; x < p; ++x) {
      Residue r = ((x * x % p + a) % p * x % p + b) % p;
      n += static_cast<std::uint64_t>(1 + chi[r]);
    }
    return n;
  }
  const CurveModel M = base_model(E);
  for (std::uint64_t i = 0; i < q; ++i) {
    FieldElement r = M.rhs(E.base->element_at(i));
    if (r.is_zero())
      n += 1;
    else if (r.pow((q - 1) / 2).is_one())
      n += 2;
  }
  return n;
}

Polynomial division_polynomial(const Curve& E, int n) {
  if (n < 2 || n > 9 || n % 2 == 0)
    throw Error(ErrorCode::UnsupportedLevel, "division polynomials provided for n in {3,5,7,9}");
  const ExtField* F = E.base.get();
  auto c = [&](std::int64_t v) { return F->from_int(v); };
  const FieldElement& a = E.a;
  const FieldElement& b = E.b;
  // psi_m = g_m for odd m, y * g_m for even m
  std::vector<Polynomial> g(n + 3, Polynomial(F));
  g[1] = Polynomial(F, {c(1)});
  g[2] = Polynomial(F, {c(2)});
  g[3] = Polynomial(F, {-(a * a), c(12) * b, c(6) * a, c(0), c(3)});
  g[4] = Polynomial(F, {c(-4) * (c(8) * b * b + a * a * a), c(-16) * a * b, c(-20) * a * a, c(80) * b,
                        c(20) * a, c(0), c(4)});
  const Polynomial Y(F, {b, a, c(0), c(1)});
  const Polynomial Y2 = Y * Y;
  const FieldElement half = c(2).inverse();
  for (int m = 5; m <= n; ++m) {
    int h = m / 2;
    if (m % 2 == 1) {
      Polynomial t1 = g[h + 2] * g[h] * g[h] * g[h];
      Polynomial t2 = g[h - 1] * g[h + 1] * g[h + 1] * g[h + 1];
      g[m] = (h % 2 == 0) ? Y2 * t1 - t2 : t1 - Y2 * t2;
    } else {
      g[m] = (g[h] * (g[h + 2] * g[h - 1] * g[h - 1] - g[h - 2] * g[h + 1] * g[h + 1])).scaled(half);
    }
  }
  return g[n];
}

namespace {

bool has_exact_order(const CurveModel& M, const CurvePoint& P, int n) {
  if (P.infinity) return false;
  if (!scalar_mul(M, n, P).infinity) return false;
  for (int r = 2; r <= n; ++r) {
    if (n % r) continue;
    bool prime = true;
    for (int s = 2; s * s <= r; ++s) prime = prime && (r % s != 0);
    if (prime && scalar_mul(M, n / r, P).infinity) return false;
  }
  return true;
}

std::optional<std::vector<CurvePoint>> torsion_points_over(const CurveModel& M, const Polynomial& psi,
                                                           int n, std::uint64_t seed) {
  const ExtField* L = M.field.get();
  std::vector<FieldElement> c;
  for (const auto& e : psi.coeffs()) c.push_back(e);
  Polynomial f(L, c);
  auto xs = roots_in_field(f, seed);
  if (static_cast<int>(xs.size()) != (n * n - 1) / 2) return std::nullopt;
  std::vector<CurvePoint> pts;
  for (const auto& x : xs) {
    FieldElement r = M.rhs(x);
    auto ys = roots_in_field(Polynomial(L, {-r, L->zero(), L->one()}), seed);
    if (ys.empty()) return std::nullopt;
    for (const auto& y : ys) pts.push_back(CurvePoint::affine(x, y));
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace

TorsionBasis torsion_basis(const Curve& E, int n, std::uint64_t seed) {
  if (n != 3 && n != 5 && n != 7 && n != 9)
    throw Error(ErrorCode::UnsupportedLevel, "torsion level must be 3, 5, 7 or 9");
  if (E.characteristic() % static_cast<Residue>(n) == 0 || (n == 9 && E.characteristic() == 3))
    throw Error(ErrorCode::UnsupportedLevel, "level divisible by the characteristic");
  const Polynomial psi0 = division_polynomial(E, n);
  const std::uint64_t q = E.q();
  const std::int64_t n2 = static_cast<std::int64_t>(n) * n;

  // cheap necessary conditions: n^2 | #E(F_{q^k}) and q^k = 1 mod n
  std::optional<std::int64_t> trace;
  if (q <= kMaxCountField)
    trace = static_cast<std::int64_t>(q) + 1 - static_cast<std::int64_t>(count_points(E));
  const std::int64_t qm = static_cast<std::int64_t>(q % static_cast<std::uint64_t>(n2));
  std::int64_t t_prev = 2, t_cur = trace ? mod(*trace, n2) : 0, qk = qm;

  for (int k = 1; E.base_degree() * k <= kMaxExtensionDegree; ++k) {
    bool candidate = qk % n == 1 % n;
    if (trace) candidate = candidate && mod(qk + 1 - t_cur, n2) == 0;
    if (trace) {
      std::int64_t t_next = mod(mod(*trace, n2) * t_cur - qm * t_prev, n2);
      t_prev = t_cur;
      t_cur = t_next;
    }
    qk = qk * qm % n2;
    if (!candidate) continue;

    CurveModel M = extend_model(E, k);
    // psi has base-field coefficients; move them into the extension
    std::vector<FieldElement> c;
    auto gen = generator_image(E, *M.field);
    for (const auto& e : psi0.coeffs()) c.push_back(embed(E, *M.field, e, gen));
    Polynomial psi(M.field.get(), c);
    auto pts = torsion_points_over(M, psi, n, seed);
    if (!pts) continue;

    TorsionBasis B;
    B.n = n;
    B.k = k;
    B.q = q;
    B.base_degree = E.base_degree();
    B.model = M;
    std::vector<CurvePoint> order_n;
    for (const auto& P : *pts)
      if (has_exact_order(M, P, n)) order_n.push_back(P);
    B.P = order_n.front();
    std::vector<CurvePoint> multiples;
    for (int i = 0; i < n; ++i) multiples.push_back(scalar_mul(M, i, B.P));
    bool found = false;
    for (const auto& Q : order_n) {
      bool independent = true;
      CurvePoint jQ = CurvePoint::at_infinity();
      for (int j = 1; j < n && independent; ++j) {
        jQ = point_add(M, jQ, Q);
        independent = std::find(multiples.begin(), multiples.end(), jQ) == multiples.end();
      }
      if (independent) {
        B.Q = Q;
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorCode::NotInSpan, "no independent torsion point found");
    B.combos.resize(n * n);
    for (int i = 0; i < n; ++i) {
      CurvePoint jq = multiples[i];
      for (int j = 0; j < n; ++j) {
        B.combos[i * n + j] = jq;
        jq = point_add(M, jq, B.Q);
      }
    }
    return B;
  }
  throw Error(ErrorCode::ExtensionCapExceeded, "no torsion field of degree <= 96");
}

CurvePoint frobenius(const TorsionBasis& B, const CurvePoint& X) {
  if (X.infinity) return X;
  FieldElement x = X.x, y = X.y;
  for (int i = 0; i < B.base_degree; ++i) {
    x = frobenius_power(x);
    y = frobenius_power(y);
  }
  return CurvePoint::affine(x, y);
}

std::pair<int, int> torsion_coordinates(const TorsionBasis& B, const CurvePoint& X) {
  for (int i = 0; i < B.n; ++i)
    for (int j = 0; j < B.n; ++j)
      if (B.combos[i * B.n + j] == X) return {i, j};
  throw Error(ErrorCode::NotInSpan, "point is not in the span of the torsion basis");
}

TorsionAction frobenius_matrix(const TorsionBasis& B) {
  auto [a, b] = torsion_coordinates(B, frobenius(B, B.P));
  auto [c, d] = torsion_coordinates(B, frobenius(B, B.Q));
  return {B.n, mat2(a, c, b, d)};
}

TorsionAction reduce_level(const TorsionAction& A, int d) {
  if (A.n % d) throw Error(ErrorCode::InvalidArgument, "level does not divide");
  return {d, reduce(A.m, d)};
}

namespace {

struct Ratio {
  FieldElement num, den;
};

// line through T and R evaluated at S, divided by the vertical at T+R
std::optional<Ratio> line_ratio(const CurveModel& M, const CurvePoint& T, const CurvePoint& R,
                                const CurvePoint& S, CurvePoint& sum) {
  const ExtField& F = *M.field;
  sum = point_add(M, T, R);
  if (T.infinity || R.infinity) return Ratio{F.one(), F.one()};
  if (sum.infinity) {
    FieldElement l = S.x - T.x;
    if (l.is_zero()) return std::nullopt;
    return Ratio{l, F.one()};
  }
  FieldElement lambda = (T.x == R.x)
                            ? (F.from_int(3) * T.x * T.x + M.a) * (F.from_int(2) * T.y).inverse()
                            : (R.y - T.y) * (R.x - T.x).inverse();
  FieldElement l = S.y - T.y - lambda * (S.x - T.x);
  FieldElement v = S.x - sum.x;
  if (l.is_zero() || v.is_zero()) return std::nullopt;
  return Ratio{l, v};
}

// Miller function with divisor n(P) - n(O), evaluated at S
std::optional<FieldElement> miller(const CurveModel& M, const CurvePoint& P, int n, const CurvePoint& S) {
  if (S.infinity) return std::nullopt;
  const ExtField& F = *M.field;
  FieldElement num = F.one(), den = F.one();
  CurvePoint T = P;
  int top = 31;
  while (!((n >> top) & 1)) --top;
  for (int i = top - 1; i >= 0; --i) {
    CurvePoint sum;
    auto r = line_ratio(M, T, T, S, sum);
    if (!r) return std::nullopt;
    num = num * num * r->num;
    den = den * den * r->den;
    T = sum;
    if ((n >> i) & 1) {
      r = line_ratio(M, T, P, S, sum);
      if (!r) return std::nullopt;
      num *= r->num;
      den *= r->den;
      T = sum;
    }
  }
  if (num.is_zero() || den.is_zero()) return std::nullopt;
  return num * den.inverse();
}

CurvePoint random_point(const CurveModel& M, std::mt19937_64& rng) {
  const ExtField& F = *M.field;
  std::uniform_int_distribution<Residue> d(0, F.characteristic() - 1);
  for (;;) {
    std::vector<Residue> c(F.degree());
    for (auto& v : c) v = d(rng);
    FieldElement x(&F, c);
    auto ys = roots_in_field(Polynomial(&F, {-M.rhs(x), F.zero(), F.one()}), rng());
    if (!ys.empty()) return CurvePoint::affine(x, ys[rng() % ys.size()]);
  }
}

}  // namespace

FieldElement weil_pairing(const CurveModel& M, const CurvePoint& P, const CurvePoint& Q, int n,
                          std::uint64_t seed) {
  check_field(M, P);
  check_field(M, Q);
  if (!scalar_mul(M, n, P).infinity || !scalar_mul(M, n, Q).infinity)
    throw Error(ErrorCode::NotTorsion, "points are not n-torsion");
  const ExtField& F = *M.field;
  if (P.infinity || Q.infinity || P == Q) return F.one();
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    CurvePoint T = random_point(M, rng);
    CurvePoint QT = point_add(M, Q, T);
    CurvePoint PmT = point_add(M, P, point_neg(M, T));
    CurvePoint mT = point_neg(M, T);
    auto a = miller(M, P, n, QT);
    auto b = miller(M, P, n, T);
    auto c = miller(M, Q, n, PmT);
    auto d = miller(M, Q, n, mT);
    if (!a || !b || !c || !d) continue;
    return *a * *d * (*b * *c).inverse();
  }
  throw Error(ErrorCode::NotTorsion, "Weil pairing evaluation kept hitting degenerate divisors");
}

}  // namespace massey
