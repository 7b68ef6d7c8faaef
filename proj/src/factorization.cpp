#include "kodaira/factorization.hpp"

#include <cstdlib>

#include "kodaira/local_reduction.hpp"

namespace kodaira {

namespace {

constexpr unsigned long kDefaultBound = 1000000;

// Largest composite we are willing to hand to rho.
const Integer kRhoLimit = Integer("1000000000000000000");

Integer pollard_rho_brent(const Integer& n, unsigned long c0) {
  // Brent's cycle-finding on f(x) = x^2 + c mod n.
  for (unsigned long c = c0;; ++c) {
    Integer x = 2, y = 2, d = 1, q = 1, ys = 0;
    unsigned long r = 1;
    const unsigned long m = 128;
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      for (unsigned long k = 0; k < r && d == 1; k += m) {
        ys = y;
        unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      r *= 2;
    }
    if (d == n) {
      // Backtrack one step at a time.
      d = 1;
      while (d == 1) {
        ys = (ys * ys + c) % n;
        Integer diff = abs(x - ys);
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (d != n) return d;
    // Rare: restart with another polynomial.
  }
}

void factor_rec(Integer n, std::map<Integer, long>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  // Discriminants are frequently high powers of a single rough factor; peel
  // perfect powers before giving up on the size of the cofactor.
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = 2;; ++k) {
      Integer root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
        std::map<Integer, long> sub;
        factor_rec(root, sub);
        for (const auto& [p, e] : sub) out[p] += e * static_cast<long>(k);
        return;
      }
    }
  }
  if (n > kRhoLimit)
    throw FactorizationError("factorization incomplete: composite cofactor " + n.get_str());
  Integer d = pollard_rho_brent(n, 1);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

unsigned long trial_division_bound() {
  if (const char* env = std::getenv("KODAIRA_FACTOR_BOUND")) {
    char* end = nullptr;
    unsigned long b = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && b >= 2) return b;
  }
  return kDefaultBound;
}

std::map<Integer, long> factorize(const Integer& n) {
  if (n == 0) throw FactorizationError("factorize: n = 0");
  std::map<Integer, long> out;
  Integer rest = abs(n);
  const unsigned long bound = trial_division_bound();
  auto strip = [&](unsigned long p) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      Integer pz(p);
      long e = static_cast<long>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), pz.get_mpz_t()));
      out[pz] = e;
    }
  };
  strip(2);
  strip(3);
  // 6k +/- 1 wheel; stop once p^2 exceeds the remainder.
  for (unsigned long p = 5; p <= bound && rest > 1; p += 6) {
    if (mpz_cmp_ui(rest.get_mpz_t(), p * p) < 0) {
      if (rest > 1) out[rest] += 1;
      rest = 1;
      break;
    }
    strip(p);
    strip(p + 2);
  }
  factor_rec(rest, out);
  return out;
}

std::vector<Integer> bad_primes(const WeierstrassModel& m) {
  auto [im, change] = integral_model(m);
  Integer delta = compute_invariants(im).delta.get_num();
  if (delta == 0) throw SingularModelError();
  std::vector<Integer> out;
  if (abs(delta) == 1) return out;
  for (const auto& [p, e] : factorize(delta)) {
    LocalReductionData d = tate_local_data(im, p);
    if (d.v_delta_min > 0) out.push_back(p);
  }
  return out;
}

}  // namespace kodaira
