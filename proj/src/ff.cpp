#include "massey/ff.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <tuple>

namespace massey {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::BadCharacteristic: return "BadCharacteristic";
    case ErrorCode::UnsupportedLevel: return "UnsupportedLevel";
    case ErrorCode::ExtensionCapExceeded: return "ExtensionCapExceeded";
    case ErrorCode::NotInSpan: return "NotInSpan";
    case ErrorCode::NotTorsion: return "NotTorsion";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::CaseMismatch: return "CaseMismatch";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::NotCongruentIdentity: return "NotCongruentIdentity";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::InvalidData: return "InvalidData";
    case ErrorCode::WrongPrime: return "WrongPrime";
    case ErrorCode::NoMatch: return "NoMatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace fp {

Residue pow(Residue a, std::uint64_t e, Residue p) {
  Residue r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

Residue inv(Residue a, Residue p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw Error(ErrorCode::NotInvertible, "residue not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<Residue>(t);
}

Residue from_int(std::int64_t v, Residue p) {
  std::int64_t m = v % static_cast<std::int64_t>(p);
  if (m < 0) m += static_cast<std::int64_t>(p);
  return static_cast<Residue>(m);
}

namespace {
std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}
}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // this witness set is deterministic for all 64-bit n
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

void trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly rem(FpPoly a, const FpPoly& m, Residue p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const Residue li = inv(m.back(), p);
  while (a.size() > dm) {
    Residue t = mul(a.back(), li, p);
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j)
      a[shift + j] = sub(a[shift + j], mul(t, m[j], p), p);
    trim(a);
  }
  return a;
}

static std::pair<FpPoly, FpPoly> divmod(FpPoly a, const FpPoly& m, Residue p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const Residue li = inv(m.back(), p);
  FpPoly q(a.size() > dm ? a.size() - dm : 0, 0);
  while (a.size() > dm) {
    Residue t = mul(a.back(), li, p);
    std::size_t shift = a.size() - 1 - dm;
    q[shift] = t;
    for (std::size_t j = 0; j <= dm; ++j)
      a[shift + j] = sub(a[shift + j], mul(t, m[j], p), p);
    trim(a);
  }
  trim(q);
  return {q, a};
}

static FpPoly mul_full(const FpPoly& a, const FpPoly& b, Residue p) {
  if (a.empty() || b.empty()) return {};
  FpPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, Residue p) {
  return rem(mul_full(a, b, p), m, p);
}

FpPoly powmod(const FpPoly& a, std::uint64_t e, const FpPoly& m, Residue p) {
  FpPoly r = rem({1}, m, p);
  FpPoly b = rem(a, m, p);
  while (e) {
    if (e & 1) r = mulmod(r, b, m, p);
    e >>= 1;
    if (e) b = mulmod(b, b, m, p);
  }
  return r;
}

FpPoly gcd(FpPoly a, FpPoly b, Residue p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Residue li = inv(a.back(), p);
    for (auto& c : a) c = mul(c, li, p);
  }
  return a;
}

bool is_irreducible(const FpPoly& f, Residue p) {
  const int k = static_cast<int>(f.size()) - 1;
  if (k < 1) return false;
  if (k == 1) return true;
  std::vector<int> primes;
  for (int r = 2, n = k; n > 1; ++r) {
    if (n % r == 0) {
      primes.push_back(r);
      while (n % r == 0) n /= r;
    }
  }
  std::vector<FpPoly> xp(k + 1);
  xp[0] = FpPoly{0, 1};
  for (int i = 1; i <= k; ++i) xp[i] = powmod(xp[i - 1], p, f, p);
  FpPoly x = rem(FpPoly{0, 1}, f, p);
  if (xp[k] != x) return false;
  for (int r : primes) {
    FpPoly h = xp[k / r];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = sub(h[1], 1, p);
    trim(h);
    if (gcd(h, f, p).size() != 1) return false;
  }
  return true;
}

}  // namespace fp

// ---------------------------------------------------------------------------

FieldElement::FieldElement(const ExtField* field, std::vector<Residue> coeffs)
    : field_(field), c_(std::move(coeffs)) {}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Residue r) { return r == 0; });
}

bool FieldElement::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](Residue r) { return r == 0; });
}

void FieldElement::check_same(const FieldElement& o) const {
  if (field_ != o.field_) throw Error(ErrorCode::FieldMismatch, "elements of different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  const Residue p = field_->characteristic();
  std::vector<Residue> r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = fp::add(c_[i], o.c_[i], p);
  return {field_, std::move(r)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  const Residue p = field_->characteristic();
  std::vector<Residue> r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = fp::sub(c_[i], o.c_[i], p);
  return {field_, std::move(r)};
}

FieldElement FieldElement::operator-() const {
  const Residue p = field_->characteristic();
  std::vector<Residue> r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = c_[i] ? p - c_[i] : 0;
  return {field_, std::move(r)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  const Residue p = field_->characteristic();
  const std::size_t k = c_.size();
  if (k == 1) return {field_, {c_[0] * o.c_[0] % p}};
  std::vector<Residue> r(2 * k - 1, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (!c_[i]) continue;
    for (std::size_t j = 0; j < k; ++j) {
      Residue& acc = r[i + j];
      acc += c_[i] * o.c_[j];
      if (acc >> 62) acc %= p;
    }
  }
  for (auto& x : r) x %= p;
  field_->reduce(r);
  return {field_, std::move(r)};
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::NotInvertible, "inverse of zero");
  const Residue p = field_->characteristic();
  if (c_.size() == 1) return {field_, {fp::inv(c_[0], p)}};
  FpPoly r0 = field_->modulus(), r1 = c_;
  fp::trim(r1);
  FpPoly s0{}, s1{1};
  while (!r1.empty()) {
    auto [q, r] = fp::divmod(r0, r1, p);
    FpPoly qs = fp::mul_full(q, s1, p);
    FpPoly ns = s0;
    ns.resize(std::max(ns.size(), qs.size()), 0);
    for (std::size_t i = 0; i < qs.size(); ++i) ns[i] = fp::sub(ns[i], qs[i], p);
    fp::trim(ns);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(ns);
  }
  // r0 is a nonzero constant
  Residue ci = fp::inv(r0[0], p);
  std::vector<Residue> out(c_.size(), 0);
  FpPoly s = fp::rem(s0, field_->modulus(), p);
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = fp::mul(s[i], ci, p);
  return {field_, std::move(out)};
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement r = field_->one();
  FieldElement b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

// ---------------------------------------------------------------------------

ExtField::ExtField(Residue p, int k, FpPoly modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {}

FieldElement ExtField::zero() const { return {this, std::vector<Residue>(k_, 0)}; }

FieldElement ExtField::one() const {
  std::vector<Residue> c(k_, 0);
  c[0] = 1 % p_;
  return {this, std::move(c)};
}

FieldElement ExtField::from_int(std::int64_t v) const {
  std::vector<Residue> c(k_, 0);
  c[0] = fp::from_int(v, p_);
  return {this, std::move(c)};
}

FieldElement ExtField::from_coeffs(const std::vector<std::int64_t>& c) const {
  FpPoly f;
  for (auto v : c) f.push_back(fp::from_int(v, p_));
  f = fp::rem(f, modulus_, p_);
  f.resize(k_, 0);
  return {this, std::move(f)};
}

FieldElement ExtField::generator() const { return from_coeffs({0, 1}); }

std::optional<std::uint64_t> ExtField::size() const {
  unsigned __int128 s = 1;
  for (int i = 0; i < k_; ++i) {
    s *= p_;
    if (s > static_cast<unsigned __int128>(UINT64_MAX)) return std::nullopt;
  }
  return static_cast<std::uint64_t>(s);
}

double ExtField::log2_size() const { return k_ * std::log2(static_cast<double>(p_)); }

FieldElement ExtField::element_at(std::uint64_t index) const {
  // c0 is the most significant digit so indices follow the canonical order
  std::vector<Residue> c(k_, 0);
  for (int i = k_ - 1; i >= 0; --i) {
    c[i] = index % p_;
    index /= p_;
  }
  return {this, std::move(c)};
}

std::vector<FieldElement> ExtField::elements() const {
  auto n = size();
  if (!n || *n > 1000000) throw Error(ErrorCode::FieldTooLarge, "field too large to enumerate");
  std::vector<FieldElement> out;
  out.reserve(*n);
  for (std::uint64_t i = 0; i < *n; ++i) out.push_back(element_at(i));
  return out;
}

void ExtField::reduce(std::vector<Residue>& c) const {
  const std::size_t k = k_;
  for (std::size_t i = c.size(); i-- > k;) {
    Residue t = c[i] % p_;
    if (t) {
      Residue nt = p_ - t;
      for (std::size_t j = 0; j < k; ++j) c[i - k + j] = (c[i - k + j] + nt * modulus_[j]) % p_;
    }
  }
  c.resize(k);
}

FieldPtr make_field_with_modulus(Residue p, const FpPoly& modulus) {
  if (!fp::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p >= (1ull << 31)) throw Error(ErrorCode::InvalidArgument, "characteristic must be below 2^31");
  FpPoly m = modulus;
  fp::trim(m);
  if (m.size() < 2 || m.back() != 1)
    throw Error(ErrorCode::InvalidArgument, "modulus must be monic of degree >= 1");
  const int k = static_cast<int>(m.size()) - 1;
  if (k > kMaxExtensionDegree) throw Error(ErrorCode::DegreeTooLarge, "extension degree above 96");
  if (k * std::log2(static_cast<double>(p)) > 380.0)
    throw Error(ErrorCode::FieldTooLarge, "field size above 2^380");
  if (!fp::is_irreducible(m, p)) throw Error(ErrorCode::InvalidArgument, "modulus is reducible");
  return std::make_shared<const ExtField>(p, k, std::move(m));
}

FieldPtr make_field(Residue p, int k) {
  if (!fp::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be positive");
  if (k > kMaxExtensionDegree) throw Error(ErrorCode::DegreeTooLarge, "extension degree above 96");
  if (p >= (1ull << 31)) throw Error(ErrorCode::InvalidArgument, "characteristic must be below 2^31");
  if (k * std::log2(static_cast<double>(p)) > 380.0)
    throw Error(ErrorCode::FieldTooLarge, "field size above 2^380");

  static std::mutex mu;
  static std::map<std::pair<Residue, int>, FieldPtr> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, k});
    if (it != cache.end()) return it->second;
  }
  FpPoly m(k + 1, 0);
  m[k] = 1;
  for (std::uint64_t n = 0;; ++n) {
    std::uint64_t t = n;
    for (int i = 0; i < k; ++i) {
      m[i] = t % p;
      t /= p;
    }
    if (fp::is_irreducible(m, p)) break;
  }
  auto f = std::make_shared<const ExtField>(p, k, m);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(p, k), f).first->second;
}

FieldElement frobenius_power(const FieldElement& x) {
  return x.pow(x.field().characteristic());
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(const ExtField* field, std::vector<FieldElement> c)
    : field_(field), c_(std::move(c)) {
  trim();
}

Polynomial Polynomial::from_fp(const ExtField* field, const FpPoly& f) {
  std::vector<FieldElement> c;
  for (Residue r : f) c.push_back(field->from_int(static_cast<std::int64_t>(r % field->characteristic())));
  return {field, std::move(c)};
}

Polynomial Polynomial::monomial(const ExtField* field, const FieldElement& c, int deg) {
  std::vector<FieldElement> v(deg + 1, field->zero());
  v[deg] = c;
  return {field, std::move(v)};
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElement Polynomial::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : field_->zero();
}

FieldElement Polynomial::operator()(const FieldElement& x) const {
  FieldElement r = field_->zero();
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), field_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return {field_, std::move(r)};
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), field_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return {field_, std::move(r)};
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial(field_);
  std::vector<FieldElement> r(c_.size() + o.c_.size() - 1, field_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return {field_, std::move(r)};
}

Polynomial Polynomial::scaled(const FieldElement& s) const {
  std::vector<FieldElement> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(c * s);
  return {field_, std::move(r)};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

PolyDivision divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  const ExtField* F = a.field();
  std::vector<FieldElement> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(F), a};
  std::vector<FieldElement> q(a.degree() - db + 1, F->zero());
  const FieldElement li = b.leading().inverse();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i].is_zero()) continue;
    FieldElement t = r[i] * li;
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b[j];
  }
  r.resize(db);
  return {Polynomial(F, std::move(q)), Polynomial(F, std::move(r))};
}

Polynomial rem(const Polynomial& a, const Polynomial& b) { return divmod(a, b).remainder; }

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& m) {
  return rem(a * b, m);
}

Polynomial powmod(const Polynomial& a, std::uint64_t e, const Polynomial& m) {
  const ExtField* F = a.field();
  Polynomial r = rem(Polynomial(F, {F->one()}), m);
  Polynomial b = rem(a, m);
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    e >>= 1;
    if (e) b = mulmod(b, b, m);
  }
  return r;
}

namespace {

FieldElement random_element(const ExtField& F, std::mt19937_64& rng) {
  std::uniform_int_distribution<Residue> d(0, F.characteristic() - 1);
  std::vector<Residue> c(F.degree());
  for (auto& x : c) x = d(rng);
  return {&F, std::move(c)};
}

// g monic, squarefree, product of linear factors over F
void split_linear(const Polynomial& g, std::mt19937_64& rng, std::vector<FieldElement>& out) {
  const ExtField* F = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-(g[0] * g[1].inverse()));
    return;
  }
  const Residue p = F->characteristic();
  const int k = F->degree();
  const Polynomial x(F, {F->zero(), F->one()});
  for (;;) {
    FieldElement r = random_element(*F, rng);
    Polynomial d(F);
    if (p == 2) {
      Polynomial t = rem(x.scaled(r.is_zero() ? F->one() : r), g);
      Polynomial acc = t;
      for (int i = 1; i < k; ++i) {
        t = mulmod(t, t, g);
        acc = acc + t;
      }
      d = gcd(g, acc);
    } else {
      Polynomial y = powmod(Polynomial(F, {r, F->one()}), (p - 1) / 2, g);
      Polynomial acc = y, cur = y;
      for (int i = 1; i < k; ++i) {
        cur = powmod(cur, p, g);
        acc = mulmod(acc, cur, g);
      }
      d = gcd(g, acc - Polynomial(F, {F->one()}));
    }
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear(d, rng, out);
      split_linear(divmod(g, d).quotient.monic(), rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<FieldElement> roots_in_field(const Polynomial& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  const ExtField* F = f.field();
  std::vector<FieldElement> out;
  if (f.degree() == 0) return out;
  auto n = F->size();
  if (n && *n <= 10000) {
    for (std::uint64_t i = 0; i < *n; ++i) {
      FieldElement e = F->element_at(i);
      if (f(e).is_zero()) out.push_back(e);
    }
    return out;
  }
  Polynomial g = f.monic();
  const Polynomial x(F, {F->zero(), F->one()});
  Polynomial h = rem(x, g);
  for (int i = 0; i < F->degree(); ++i) h = powmod(h, F->characteristic(), g);
  Polynomial d = gcd(g, h - x);
  std::mt19937_64 rng(seed);
  split_linear(d, rng, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<FieldElement> roots_in_field(const FpPoly& f, const ExtField& field, std::uint64_t seed) {
  return roots_in_field(Polynomial::from_fp(&field, f), seed);
}

}  // namespace massey
