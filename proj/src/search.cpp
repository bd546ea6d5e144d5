#include "massey/search.hpp"

namespace massey {

const char* search_case_name(SearchCase c) {
  switch (c) {
    case SearchCase::Full3: return "full3";
    case SearchCase::Split: return "split";
    case SearchCase::Unipotent: return "unipotent";
  }
  return "?";
}

SearchCase parse_search_case(const std::string& s) {
  if (s == "full3") return SearchCase::Full3;
  if (s == "split") return SearchCase::Split;
  if (s == "unipotent") return SearchCase::Unipotent;
  throw Error(ErrorCode::InvalidArgument, "unknown case '" + s + "'");
}

namespace {

bool prefilter(const SearchOptions& o, std::uint64_t p, std::uint64_t N) {
  const std::uint64_t l = o.ell;
  switch (o.kind) {
    case SearchCase::Full3: return p % 3 == 1 && N % 9 == 0;
    case SearchCase::Split: return N % l == 0 && p % l != 1;
    case SearchCase::Unipotent: return p % l == 1 && N % l == 0;
  }
  return false;
}

GaloisCase wanted(SearchCase c) {
  switch (c) {
    case SearchCase::Full3: return GaloisCase::FullTorsion;
    case SearchCase::Split: return GaloisCase::SplitLine;
    case SearchCase::Unipotent: return GaloisCase::UnipotentLine;
  }
  return GaloisCase::FullTorsion;
}

}  // namespace

std::vector<SearchHit> search_curves(const SearchOptions& o) {
  if (o.kind == SearchCase::Full3 && o.ell != 3) throw Error(ErrorCode::InvalidArgument, "full3 needs ell = 3");
  if (o.ell != 3 && o.ell != 5 && o.ell != 7) throw Error(ErrorCode::UnsupportedLevel, "ell must be 3, 5 or 7");
  if (o.max_p > kMaxCountField) throw Error(ErrorCode::FieldTooLarge, "max-p is limited to 50021");
  std::vector<SearchHit> hits;
  for (std::uint64_t p = std::max<std::uint64_t>(o.min_p, 5); p <= o.max_p; ++p) {
    if (!fp::is_prime(p) || p == static_cast<std::uint64_t>(o.ell)) continue;
    if (o.p_residue && static_cast<int>(p % o.ell) != mod(*o.p_residue, o.ell)) continue;
    int here = 0;
    auto consider = [&](const Curve& E, std::int64_t a, std::int64_t b, std::optional<std::int64_t> t) {
      const std::uint64_t N = count_points(E);
      if (!prefilter(o, p, N)) return;
      TorsionAction A = frobenius_matrix(torsion_basis(E, o.ell, o.seed));
      if (classify_case(A) != wanted(o.kind)) return;
      hits.push_back({p, a, b, t, N, A});
      ++here;
    };
    auto done = [&] {
      return (o.limit && static_cast<int>(hits.size()) >= o.limit) || (o.per_prime && here >= o.per_prime);
    };
    if (o.igusa) {
      auto F = make_field(p, 1);
      for (std::int64_t t = 1; t < static_cast<std::int64_t>(p) && !done(); ++t) {
        if (static_cast<std::uint64_t>(t) == 1728 % p) continue;
        Curve E = igusa_curve(F, t);
        if (E.discriminant.is_zero()) continue;
        consider(E, static_cast<std::int64_t>(E.a.coeffs()[0]), static_cast<std::int64_t>(E.b.coeffs()[0]), t);
      }
    } else {
      for (std::int64_t a = 0; a < static_cast<std::int64_t>(p) && !done(); ++a)
        for (std::int64_t b = 0; b < static_cast<std::int64_t>(p) && !done(); ++b) {
          if ((4 * a % p * a % p * a + 27 * b % p * b) % p == 0) continue;
          consider(curve_from_ints(p, a, b), a, b, std::nullopt);
        }
    }
    if (o.limit && static_cast<int>(hits.size()) >= o.limit) break;
  }
  return hits;
}

}  // namespace massey
