// Integer factorization: trial division up to a bound (default 10^6,
// overridable via KODAIRA_FACTOR_BOUND), deterministic Miller-Rabin, and
// Brent's variant of Pollard rho for the cofactor.
#pragma once

#include <map>
#include <vector>

#include "kodaira/curve.hpp"
#include "kodaira/rational.hpp"

namespace kodaira {

struct FactorizationError : std::runtime_error {
  explicit FactorizationError(const std::string& what) : std::runtime_error(what) {}
};

// Prime -> exponent map of |n|, n != 0.  Throws FactorizationError naming the
// cofactor if a composite > 10^18 resists splitting.
std::map<Integer, long> factorize(const Integer& n);

unsigned long trial_division_bound();

// Ascending primes dividing the global minimal discriminant of m.
std::vector<Integer> bad_primes(const WeierstrassModel& m);

}  // namespace kodaira
