#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>

namespace massey {

using Mat2 = Eigen::Matrix<std::int64_t, 2, 2>;
using Vec2 = Eigen::Matrix<std::int64_t, 2, 1>;

inline std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

template <class Derived>
auto reduce(const Eigen::MatrixBase<Derived>& m, std::int64_t n) {
  return m.unaryExpr([n](std::int64_t x) { return mod(x, n); }).eval();
}

Mat2 mat2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
Vec2 vec2(std::int64_t x, std::int64_t y);

Mat2 mul(const Mat2& a, const Mat2& b, std::int64_t n);
Vec2 apply(const Mat2& a, const Vec2& v, std::int64_t n);
Mat2 pow(const Mat2& a, std::uint64_t e, std::int64_t n);
std::int64_t det(const Mat2& a, std::int64_t n);
std::int64_t inv_mod(std::int64_t a, std::int64_t n);  // 0 if not a unit
std::optional<Mat2> inverse(const Mat2& a, std::int64_t n);
// multiplicative order, 0 if not invertible
int order(const Mat2& a, std::int64_t n);
bool is_identity(const Mat2& a, std::int64_t n);
bool is_scalar(const Mat2& a, std::int64_t n);
// x ∈ (Z/n)·a
bool in_line(const Vec2& x, const Vec2& a, std::int64_t n);

}  // namespace massey
