#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "massey/error.hpp"

namespace massey {

using Residue = std::uint64_t;

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;
inline constexpr int kMaxExtensionDegree = 96;

// Polynomials over F_p, coefficients low to high, no trailing zeros.
using FpPoly = std::vector<Residue>;

namespace fp {

inline Residue add(Residue a, Residue b, Residue p) {
  Residue s = a + b;
  return s >= p ? s - p : s;
}
inline Residue sub(Residue a, Residue b, Residue p) {
  return a >= b ? a - b : a + p - b;
}
inline Residue mul(Residue a, Residue b, Residue p) { return a * b % p; }
Residue pow(Residue a, std::uint64_t e, Residue p);
Residue inv(Residue a, Residue p);
Residue from_int(std::int64_t v, Residue p);
bool is_prime(std::uint64_t n);

void trim(FpPoly& f);
FpPoly rem(FpPoly a, const FpPoly& m, Residue p);
FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, Residue p);
FpPoly powmod(const FpPoly& a, std::uint64_t e, const FpPoly& m, Residue p);
FpPoly gcd(FpPoly a, FpPoly b, Residue p);
bool is_irreducible(const FpPoly& f, Residue p);

}  // namespace fp

class ExtField;

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const ExtField* field, std::vector<Residue> coeffs);

  const ExtField& field() const { return *field_; }
  const ExtField* field_ptr() const { return field_; }
  const std::vector<Residue>& coeffs() const { return c_; }
  bool valid() const { return field_ != nullptr; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  bool operator==(const FieldElement& o) const { return c_ == o.c_; }
  // canonical order: coefficient tuples (c0, c1, ...) lexicographically
  bool operator<(const FieldElement& o) const { return c_ < o.c_; }

 private:
  void check_same(const FieldElement& o) const;
  const ExtField* field_ = nullptr;
  std::vector<Residue> c_;
};

class ExtField {
 public:
  ExtField(Residue p, int k, FpPoly modulus);

  Residue characteristic() const { return p_; }
  int degree() const { return k_; }
  const FpPoly& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_coeffs(const std::vector<std::int64_t>& c) const;
  FieldElement generator() const;  // the class of X

  // p^k when it fits in 64 bits
  std::optional<std::uint64_t> size() const;
  double log2_size() const;
  // all elements in canonical order; only for small fields
  std::vector<FieldElement> elements() const;
  FieldElement element_at(std::uint64_t index) const;

  // reduction of a product of length up to 2k-1
  void reduce(std::vector<Residue>& c) const;

 private:
  Residue p_;
  int k_;
  FpPoly modulus_;
};

using FieldPtr = std::shared_ptr<const ExtField>;

FieldPtr make_field(Residue p, int k);
FieldPtr make_field_with_modulus(Residue p, const FpPoly& modulus);

FieldElement frobenius_power(const FieldElement& x);

// Dense polynomial with coefficients in an ExtField, low to high.
class Polynomial {
 public:
  explicit Polynomial(const ExtField* field) : field_(field) {}
  Polynomial(const ExtField* field, std::vector<FieldElement> c);
  static Polynomial from_fp(const ExtField* field, const FpPoly& f);
  static Polynomial monomial(const ExtField* field, const FieldElement& c, int deg);

  const ExtField* field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  const FieldElement& operator[](std::size_t i) const { return c_[i]; }
  FieldElement coeff(int i) const;
  const FieldElement& leading() const { return c_.back(); }

  FieldElement operator()(const FieldElement& x) const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const FieldElement& s) const;
  Polynomial monic() const;
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

 private:
  void trim();
  const ExtField* field_;
  std::vector<FieldElement> c_;
};

struct PolyDivision {
  Polynomial quotient;
  Polynomial remainder;
};
PolyDivision divmod(const Polynomial& a, const Polynomial& b);
Polynomial rem(const Polynomial& a, const Polynomial& b);
Polynomial gcd(Polynomial a, Polynomial b);
Polynomial mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& m);
Polynomial powmod(const Polynomial& a, std::uint64_t e, const Polynomial& m);

// Roots lying in f's coefficient field, sorted canonically, without repeats.
std::vector<FieldElement> roots_in_field(const Polynomial& f,
                                         std::uint64_t seed = kDefaultSeed);
std::vector<FieldElement> roots_in_field(const FpPoly& f, const ExtField& field,
                                         std::uint64_t seed = kDefaultSeed);

}  // namespace massey
