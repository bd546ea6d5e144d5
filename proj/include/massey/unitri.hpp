#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace massey {

using Dense4 = Eigen::Matrix<std::int64_t, 4, 4>;

// M(a1,a2,a3,u,v,w) =
//   [1 a1 u  v]
//   [0 1  a2 w]
//   [0 0  1  a3]
//   [0 0  0  1]
struct U4Matrix {
  int ell = 3;
  int a1 = 0, a2 = 0, a3 = 0, u = 0, v = 0, w = 0;

  static U4Matrix identity(int ell) { return {ell}; }
  static U4Matrix make(int ell, std::int64_t a1, std::int64_t a2, std::int64_t a3, std::int64_t u,
                       std::int64_t v, std::int64_t w);
  Dense4 dense() const;
  static U4Matrix from_dense(const Dense4& d, int ell);
  bool is_identity() const { return !a1 && !a2 && !a3 && !u && !v && !w; }
  bool operator==(const U4Matrix& o) const = default;
};

U4Matrix u4_identity(int ell);
U4Matrix u4_mul(const U4Matrix& x, const U4Matrix& y);
U4Matrix u4_inv(const U4Matrix& x);
// plain 4x4 product through Eigen, reduced mod ell
U4Matrix u4_dense_mul(const U4Matrix& x, const U4Matrix& y);
U4Matrix u4_pow_generic(const U4Matrix& x, std::int64_t e);
U4Matrix u4_pow_closed(const U4Matrix& x, std::int64_t e);
U4Matrix u4_commutator_generic(const U4Matrix& x, const U4Matrix& y);
U4Matrix u4_commutator_closed(const U4Matrix& x, const U4Matrix& y);
U4Matrix mod_center(const U4Matrix& x);

std::int64_t binomial(std::int64_t n, std::int64_t k);

struct U3Matrix {
  int ell = 3;
  int top = 0, right = 0, corner = 0;

  static U3Matrix identity(int ell) { return {ell}; }
  bool is_identity() const { return !top && !right && !corner; }
  bool operator==(const U3Matrix& o) const = default;
};

U3Matrix u3_mul(const U3Matrix& x, const U3Matrix& y);
U3Matrix u3_inv(const U3Matrix& x);

// N(a,u,v,w) = M(a,a,a,u,v,w) over Z/3
struct HMatrix {
  int a = 0, u = 0, v = 0, w = 0;

  U4Matrix to_u4() const { return U4Matrix::make(3, a, a, a, u, v, w); }
  static HMatrix from_u4(const U4Matrix& m);  // throws InvalidArgument outside H
  bool operator==(const HMatrix& o) const = default;
};

}  // namespace massey
