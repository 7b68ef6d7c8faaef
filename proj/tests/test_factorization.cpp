#include <cstdlib>

#include "doctest.h"
#include "kodaira/factorization.hpp"
#include "kodaira/local_reduction.hpp"

using namespace kodaira;

TEST_CASE("factorize small integers") {
  std::map<Integer, long> expected{{2, 4}, {3, 2}, {5, 1}};
  CHECK(factorize(720) == expected);
  CHECK(factorize(-720) == expected);
  CHECK(factorize(1) == std::map<Integer, long>{});
  CHECK(factorize(-1) == std::map<Integer, long>{});
  CHECK(factorize(97) == std::map<Integer, long>{{97, 1}});
  CHECK_THROWS_AS(factorize(0), FactorizationError);
}

TEST_CASE("factorize recombines to the input") {
  for (long n : {360360L, 1000003L, 999999999989L, 600851475143L}) {
    Integer prod = 1;
    for (const auto& [p, e] : factorize(n)) {
      CHECK(is_prime(p));
      for (long i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("semiprime beyond the trial-division bound") {
  // Both factors exceed the default bound of 10^6, so rho must split this.
  Integer p = 1000003, q = 1000033;
  auto f = factorize(p * q);
  CHECK(f == std::map<Integer, long>{{p, 1}, {q, 1}});
}

TEST_CASE("oversized composite cofactor is reported, not looped on") {
  Integer p, q, ten10 = Integer(10);
  mpz_pow_ui(ten10.get_mpz_t(), ten10.get_mpz_t(), 10);
  mpz_nextprime(p.get_mpz_t(), ten10.get_mpz_t());
  mpz_nextprime(q.get_mpz_t(), p.get_mpz_t());
  // p * q ~ 10^20 is composite and larger than the rho cutoff.
  CHECK_THROWS_AS(factorize(p * q), FactorizationError);
}

TEST_CASE("KODAIRA_FACTOR_BOUND overrides the trial-division bound") {
  CHECK(trial_division_bound() == 1000000);
  setenv("KODAIRA_FACTOR_BOUND", "100", 1);
  CHECK(trial_division_bound() == 100);
  // Factors above the shrunken bound are still found correctly.
  CHECK(factorize(101 * 101) == std::map<Integer, long>{{101, 2}});
  setenv("KODAIRA_FACTOR_BOUND", "nonsense", 1);
  CHECK(trial_division_bound() == 1000000);  // invalid values fall back
  unsetenv("KODAIRA_FACTOR_BOUND");
  CHECK(trial_division_bound() == 1000000);
}

TEST_CASE("bad_primes") {
  SUBCASE("conductor 2 * 5^2 * 17^2 fixture") {
    std::vector<Integer> expected{2, 5, 17};
    CHECK(bad_primes({1, 0, 1, -190891, -36002922}) == expected);
  }
  SUBCASE("y^2 = x^3 + 1") {
    std::vector<Integer> expected{2, 3};
    CHECK(bad_primes({0, 0, 0, 0, 1}) == expected);
  }
  SUBCASE("non-minimal primes are filtered out") {
    // y^2 = x^3 + 5^6 is y^2 = x^3 + 1 in disguise; 5 is not a bad prime.
    std::vector<Integer> expected{2, 3};
    CHECK(bad_primes({0, 0, 0, 0, 15625}) == expected);
  }
  SUBCASE("rational coefficients are cleared first") {
    std::vector<Integer> expected{2, 3};
    CHECK(bad_primes({0, 0, 0, 0, Rational(1, 64)}) == expected);
  }
  SUBCASE("singular model rejected") {
    CHECK_THROWS_AS(bad_primes({0, 0, 0, 0, 0}), SingularModelError);
  }
}
