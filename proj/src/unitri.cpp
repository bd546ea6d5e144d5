#include "massey/unitri.hpp"

#include "massey/error.hpp"
#include "massey/zmod.hpp"

namespace massey {

namespace {

int md(std::int64_t x, int ell) { return static_cast<int>(mod(x, ell)); }

void same_modulus(const U4Matrix& x, const U4Matrix& y) {
  if (x.ell != y.ell) throw Error(ErrorCode::ModulusMismatch, "U4 matrices over different moduli");
}

}  // namespace

U4Matrix U4Matrix::make(int ell, std::int64_t a1, std::int64_t a2, std::int64_t a3, std::int64_t u,
                        std::int64_t v, std::int64_t w) {
  return {ell, md(a1, ell), md(a2, ell), md(a3, ell), md(u, ell), md(v, ell), md(w, ell)};
}

Dense4 U4Matrix::dense() const {
  Dense4 d = Dense4::Identity();
  d(0, 1) = a1;
  d(1, 2) = a2;
  d(2, 3) = a3;
  d(0, 2) = u;
  d(0, 3) = v;
  d(1, 3) = w;
  return d;
}

U4Matrix U4Matrix::from_dense(const Dense4& d, int ell) {
  Dense4 r = reduce(d, ell);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j <= i; ++j)
      if (r(i, j) != (i == j ? 1 % ell : 0))
        throw Error(ErrorCode::InvalidArgument, "matrix is not upper unitriangular");
  return make(ell, r(0, 1), r(1, 2), r(2, 3), r(0, 2), r(0, 3), r(1, 3));
}

U4Matrix u4_identity(int ell) { return U4Matrix::identity(ell); }

U4Matrix u4_mul(const U4Matrix& x, const U4Matrix& y) {
  same_modulus(x, y);
  const int l = x.ell;
  return {l,
          md(x.a1 + y.a1, l),
          md(x.a2 + y.a2, l),
          md(x.a3 + y.a3, l),
          md(x.u + y.u + x.a1 * y.a2, l),
          md(x.v + y.v + x.a1 * y.w + x.u * y.a3, l),
          md(x.w + y.w + x.a2 * y.a3, l)};
}

U4Matrix u4_inv(const U4Matrix& x) {
  // (I + X)^-1 = I - X + X^2 - X^3
  const int l = x.ell;
  return {l,
          md(-x.a1, l),
          md(-x.a2, l),
          md(-x.a3, l),
          md(-x.u + x.a1 * x.a2, l),
          md(-x.v + x.a1 * x.w + x.u * x.a3 - x.a1 * x.a2 * x.a3, l),
          md(-x.w + x.a2 * x.a3, l)};
}

U4Matrix u4_dense_mul(const U4Matrix& x, const U4Matrix& y) {
  same_modulus(x, y);
  return U4Matrix::from_dense(x.dense() * y.dense(), x.ell);
}

U4Matrix u4_pow_generic(const U4Matrix& x, std::int64_t e) {
  U4Matrix base = e < 0 ? u4_inv(x) : x;
  std::int64_t n = e < 0 ? -e : e;
  U4Matrix r = u4_identity(x.ell);
  while (n) {
    if (n & 1) r = u4_mul(r, base);
    n >>= 1;
    if (n) base = u4_mul(base, base);
  }
  return r;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

U4Matrix u4_pow_closed(const U4Matrix& x, std::int64_t e) {
  if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  const int l = x.ell;
  const std::int64_t c2 = binomial(l, 2), c3 = binomial(l, 3);
  const U4Matrix xl{l,
                    md(std::int64_t{l} * x.a1, l),
                    md(std::int64_t{l} * x.a2, l),
                    md(std::int64_t{l} * x.a3, l),
                    md(std::int64_t{l} * x.u + c2 * x.a1 * x.a2, l),
                    md(std::int64_t{l} * x.v + c2 * x.a1 * x.w + c2 * x.a3 * x.u + c3 * x.a1 * x.a2 * x.a3, l),
                    md(std::int64_t{l} * x.w + c2 * x.a2 * x.a3, l)};
  if (e == l) return xl;
  return u4_mul(u4_pow_generic(xl, e / l), u4_pow_generic(x, e % l));
}

U4Matrix u4_commutator_generic(const U4Matrix& x, const U4Matrix& y) {
  return u4_mul(u4_mul(x, y), u4_mul(u4_inv(x), u4_inv(y)));
}

U4Matrix u4_commutator_closed(const U4Matrix& x, const U4Matrix& y) {
  same_modulus(x, y);
  const int l = x.ell;
  const std::int64_t c13 = x.a1 * y.a2 - x.a2 * y.a1;
  const std::int64_t c24 = x.a2 * y.a3 - x.a3 * y.a2;
  const std::int64_t c14 = (x.a1 * y.w - x.w * y.a1) - (x.a3 * y.u - y.a3 * x.u) - c13 * (x.a3 + y.a3);
  return U4Matrix::make(l, 0, 0, 0, c13, c14, c24);
}

U4Matrix mod_center(const U4Matrix& x) {
  U4Matrix r = x;
  r.v = 0;
  return r;
}

U3Matrix u3_mul(const U3Matrix& x, const U3Matrix& y) {
  if (x.ell != y.ell) throw Error(ErrorCode::ModulusMismatch, "U3 matrices over different moduli");
  const int l = x.ell;
  return {l, md(x.top + y.top, l), md(x.right + y.right, l), md(x.corner + y.corner + x.top * y.right, l)};
}

U3Matrix u3_inv(const U3Matrix& x) {
  const int l = x.ell;
  return {l, md(-x.top, l), md(-x.right, l), md(-x.corner + x.top * x.right, l)};
}

HMatrix HMatrix::from_u4(const U4Matrix& m) {
  if (m.ell != 3 || m.a1 != m.a2 || m.a2 != m.a3)
    throw Error(ErrorCode::InvalidArgument, "matrix is not in H");
  return {m.a1, m.u, m.v, m.w};
}

}  // namespace massey
