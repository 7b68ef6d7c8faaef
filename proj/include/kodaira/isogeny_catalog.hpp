// The rational j-invariants admitting a Q-rational isogeny of prime degree
// ell, for the finitely-many-j primes ell in {11, 17, 19, 37, 43, 67, 163}.
// ell = 2, 3, 5, 7, 13 have infinitely many such j and are deliberately
// absent; an empty lookup means "no ell >= 11 isogeny detected", not "no
// isogeny".
#pragma once

#include <set>
#include <vector>

#include "kodaira/rational.hpp"

namespace kodaira {

struct IsogenyCatalogEntry {
  long ell;
  Rational j;
};

const std::vector<IsogenyCatalogEntry>& isogeny_catalog();

// Every catalogued ell whose j-list contains j exactly.
std::set<long> lookup_ell_by_j(const Rational& j);

// The exact j-list for a supported ell, in catalog order.
// Unsupported ell -> domain error naming the supported set.
std::vector<Rational> catalog_j_for(long ell);

bool catalog_supports(long ell);

}  // namespace kodaira
