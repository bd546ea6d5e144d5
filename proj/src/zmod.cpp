#include "massey/zmod.hpp"

#include <numeric>

namespace massey {

Mat2 mat2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  Mat2 m;
  m << a, b, c, d;
  return m;
}

Vec2 vec2(std::int64_t x, std::int64_t y) { return Vec2(x, y); }

Mat2 mul(const Mat2& a, const Mat2& b, std::int64_t n) { return reduce(a * b, n); }

Vec2 apply(const Mat2& a, const Vec2& v, std::int64_t n) { return reduce(a * v, n); }

Mat2 pow(const Mat2& a, std::uint64_t e, std::int64_t n) {
  Mat2 r = reduce(Mat2::Identity(), n);
  Mat2 b = reduce(a, n);
  while (e) {
    if (e & 1) r = mul(r, b, n);
    b = mul(b, b, n);
    e >>= 1;
  }
  return r;
}

std::int64_t det(const Mat2& a, std::int64_t n) {
  return mod(a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0), n);
}

std::int64_t inv_mod(std::int64_t a, std::int64_t n) {
  a = mod(a, n);
  for (std::int64_t x = 1; x < n; ++x)
    if (a * x % n == 1 % n) return x;
  return n == 1 ? 0 : 0;
}

std::optional<Mat2> inverse(const Mat2& a, std::int64_t n) {
  std::int64_t d = det(a, n);
  if (std::gcd(d, n) != 1) return std::nullopt;
  std::int64_t di = inv_mod(d, n);
  Mat2 adj = mat2(a(1, 1), -a(0, 1), -a(1, 0), a(0, 0));
  return reduce(adj * di, n);
}

int order(const Mat2& a, std::int64_t n) {
  if (std::gcd(det(a, n), n) != 1) return 0;
  Mat2 id = reduce(Mat2::Identity(), n);
  Mat2 x = reduce(a, n);
  for (int k = 1;; ++k) {
    if (x == id) return k;
    x = mul(x, a, n);
  }
}

bool is_identity(const Mat2& a, std::int64_t n) {
  return reduce(a, n) == reduce(Mat2::Identity(), n);
}

bool is_scalar(const Mat2& a, std::int64_t n) {
  Mat2 r = reduce(a, n);
  return r(0, 1) == 0 && r(1, 0) == 0 && r(0, 0) == r(1, 1);
}

bool in_line(const Vec2& x, const Vec2& a, std::int64_t n) {
  Vec2 xr = reduce(x, n);
  for (std::int64_t s = 0; s < n; ++s)
    if (reduce(a * s, n) == xr) return true;
  return false;
}

}  // namespace massey
