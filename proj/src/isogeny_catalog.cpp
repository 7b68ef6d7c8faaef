#include "kodaira/isogeny_catalog.hpp"

#include <sstream>

namespace kodaira {

namespace {

Rational pow_rat(long base, long exp) {
  Integer b(base), r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
  return Rational(r);
}

// j-values assembled from their prime factorizations, never from expanded
// decimal literals.
std::vector<IsogenyCatalogEntry> build_catalog() {
  std::vector<IsogenyCatalogEntry> cat;
  // ell = 11: -11*131^3, -2^15, -11^2
  cat.push_back({11, -11 * pow_rat(131, 3)});
  cat.push_back({11, -pow_rat(2, 15)});
  cat.push_back({11, -pow_rat(11, 2)});
  // ell = 17: -17^2*101^3/2, -17*373^3/2^17
  cat.push_back({17, -pow_rat(17, 2) * pow_rat(101, 3) / 2});
  cat.push_back({17, -17 * pow_rat(373, 3) / pow_rat(2, 17)});
  // ell = 19: -2^15*3^3
  cat.push_back({19, -pow_rat(2, 15) * pow_rat(3, 3)});
  // ell = 37: -7*11^3, -7*137^3*2083^3
  cat.push_back({37, -7 * pow_rat(11, 3)});
  cat.push_back({37, -7 * pow_rat(137, 3) * pow_rat(2083, 3)});
  // ell = 43: -2^18*3^3*5^3
  cat.push_back({43, -pow_rat(2, 18) * pow_rat(3, 3) * pow_rat(5, 3)});
  // ell = 67: -2^15*3^3*5^3*11^3
  cat.push_back({67, -pow_rat(2, 15) * pow_rat(3, 3) * pow_rat(5, 3) * pow_rat(11, 3)});
  // ell = 163: -2^18*3^3*5^3*23^3*29^3
  cat.push_back({163, -pow_rat(2, 18) * pow_rat(3, 3) * pow_rat(5, 3) * pow_rat(23, 3) *
                          pow_rat(29, 3)});
  for (auto& e : cat) e.j.canonicalize();
  return cat;
}

}  // namespace

const std::vector<IsogenyCatalogEntry>& isogeny_catalog() {
  static const std::vector<IsogenyCatalogEntry> cat = build_catalog();
  return cat;
}

bool catalog_supports(long ell) {
  for (const auto& e : isogeny_catalog())
    if (e.ell == ell) return true;
  return false;
}

std::set<long> lookup_ell_by_j(const Rational& j) {
  std::set<long> out;
  for (const auto& e : isogeny_catalog())
    if (e.j == j) out.insert(e.ell);
  return out;
}

std::vector<Rational> catalog_j_for(long ell) {
  if (!catalog_supports(ell)) {
    std::ostringstream msg;
    msg << "catalog_j_for: unsupported ell " << ell
        << "; supported: {11, 17, 19, 37, 43, 67, 163}";
    throw std::domain_error(msg.str());
  }
  std::vector<Rational> out;
  for (const auto& e : isogeny_catalog())
    if (e.ell == ell) out.push_back(e.j);
  return out;
}

}  // namespace kodaira
