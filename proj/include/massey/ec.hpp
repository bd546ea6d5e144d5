#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "massey/ff.hpp"
#include "massey/zmod.hpp"

namespace massey {

// y^2 = x^3 + a x + b over F_q, q = p^k0, p >= 5
struct Curve {
  FieldPtr base;
  FieldElement a, b;
  FieldElement discriminant;  // 4a^3 + 27b^2
  FieldElement j;

  Residue characteristic() const { return base->characteristic(); }
  int base_degree() const { return base->degree(); }
  std::uint64_t q() const;
};

Curve curve_new(FieldPtr base, const FieldElement& a, const FieldElement& b);
Curve curve_from_ints(Residue p, std::int64_t a, std::int64_t b);
// short model of y^2 = 4x^3 - 27t/(t-1728) x - 27t/(t-1728), which has j = t
Curve igusa_curve(FieldPtr base, std::int64_t t0);

struct CurvePoint {
  bool infinity = true;
  FieldElement x, y;

  static CurvePoint at_infinity() { return {}; }
  static CurvePoint affine(FieldElement x, FieldElement y) { return {false, std::move(x), std::move(y)}; }
  bool operator==(const CurvePoint& o) const;
  bool operator<(const CurvePoint& o) const;  // infinity first, then x, then y
};

// A curve's coefficients viewed in some field containing the base.
struct CurveModel {
  FieldPtr field;
  FieldElement a, b;

  FieldElement rhs(const FieldElement& x) const { return (x * x + a) * x + b; }
  bool on_curve(const CurvePoint& P) const;
};

CurveModel base_model(const Curve& E);
// E over F_{q^k}, realized as F_{p^(k0 k)}
CurveModel extend_model(const Curve& E, int k);

CurvePoint point_neg(const CurveModel& M, const CurvePoint& P);
CurvePoint point_add(const CurveModel& M, const CurvePoint& P, const CurvePoint& Q);
CurvePoint scalar_mul(const CurveModel& M, std::int64_t m, const CurvePoint& P);

// exhaustive listing, small fields only
std::vector<CurvePoint> all_points(const CurveModel& M);

inline constexpr std::uint64_t kMaxCountField = 50021;
std::uint64_t count_points(const Curve& E);

Polynomial division_polynomial(const Curve& E, int n);

struct TorsionBasis {
  int n = 0;
  int k = 0;  // over the base field
  std::uint64_t q = 0;
  int base_degree = 1;
  CurveModel model;
  CurvePoint P, Q;
  std::vector<CurvePoint> combos;  // combos[i*n + j] = iP + jQ
};

TorsionBasis torsion_basis(const Curve& E, int n, std::uint64_t seed = kDefaultSeed);
CurvePoint frobenius(const TorsionBasis& B, const CurvePoint& X);
// (i, j) with X = iP + jQ
std::pair<int, int> torsion_coordinates(const TorsionBasis& B, const CurvePoint& X);

struct TorsionAction {
  int n = 0;
  Mat2 m = Mat2::Identity();  // columns are coordinates of Phi(P), Phi(Q)
};

TorsionAction frobenius_matrix(const TorsionBasis& B);
// the same action on the basis ((n/d)P, (n/d)Q) of E[d]
TorsionAction reduce_level(const TorsionAction& A, int d);

FieldElement weil_pairing(const CurveModel& M, const CurvePoint& P, const CurvePoint& Q, int n,
                          std::uint64_t seed = kDefaultSeed);

}  // namespace massey
