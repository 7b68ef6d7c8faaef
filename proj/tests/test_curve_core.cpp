#include <random>

#include "doctest.h"
#include "kodaira/curve.hpp"
#include "kodaira/rational.hpp"

using namespace kodaira;

namespace {

const WeierstrassModel kExample1{1, 0, 1, -190891, -36002922};  // 17-isogeny fixture

// j = -17 * 373^3 / 2^17
Rational example1_j() {
  Integer n = Integer(-17) * Integer(373) * 373 * 373;
  Integer d;
  mpz_pow_ui(d.get_mpz_t(), Integer(2).get_mpz_t(), 17);
  Rational j(n, d);
  j.canonicalize();
  return j;
}

WeierstrassModel random_model(std::mt19937_64& rng, long height) {
  std::uniform_int_distribution<long> coeff(-height, height);
  for (;;) {
    WeierstrassModel m{coeff(rng), coeff(rng), coeff(rng), coeff(rng), coeff(rng)};
    if (compute_invariants(m).delta != 0) return m;
  }
}

}  // namespace

TEST_CASE("padic_valuation on integers and rationals") {
  CHECK(padic_valuation(Rational(720), 2) == Valuation(4));
  CHECK(padic_valuation(Rational(720), 3) == Valuation(2));
  CHECK(padic_valuation(Rational(0), 7) == Valuation::infinity());
  CHECK(padic_valuation(example1_j(), 2) == Valuation(-17));
  CHECK(padic_valuation(Rational(1, 9), 3) == Valuation(-2));
  CHECK(padic_valuation(Rational(7), 7) == Valuation(1));
  CHECK_THROWS_AS(padic_valuation(Rational(6), 4), std::domain_error);
}

TEST_CASE("valuation is a valuation") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-5000, 5000);
  std::uniform_int_distribution<long> den(1, 5000);
  const Integer primes[] = {2, 3, 5, 7, 13};
  for (int i = 0; i < 200; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    for (const auto& p : primes) {
      auto va = padic_valuation(a, p), vb = padic_valuation(b, p);
      CHECK(padic_valuation(a * b, p) == va + vb);
      auto vsum = padic_valuation(a + b, p);
      CHECK(vsum >= std::min(va, vb));
      if (!(va == vb)) CHECK(vsum == std::min(va, vb));
    }
  }
}

TEST_CASE("compute_invariants fixtures") {
  SUBCASE("y^2 = x^3 + 1") {
    auto s = compute_invariants({0, 0, 0, 0, 1});
    CHECK(s.c4 == 0);
    CHECK(s.c6 == -864);
    CHECK(s.delta == -432);
    REQUIRE(s.j.has_value());
    CHECK(*s.j == 0);
  }
  SUBCASE("17-isogeny fixture model") {
    auto s = compute_invariants(kExample1);
    REQUIRE(s.j.has_value());
    CHECK(*s.j == example1_j());
  }
  SUBCASE("degenerate cubic is reported, not rejected") {
    auto s = compute_invariants({0, 0, 0, 0, 0});
    CHECK(s.delta == 0);
    CHECK_FALSE(s.j.has_value());
  }
}

TEST_CASE("invariant identities hold exactly on random models") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    auto m = random_model(rng, 10000);
    auto s = compute_invariants(m);
    CHECK(4 * s.b8 == s.b2 * s.b6 - s.b4 * s.b4);
    CHECK(s.c4 * s.c4 * s.c4 - s.c6 * s.c6 == 1728 * s.delta);
    CHECK(*s.j == s.c4 * s.c4 * s.c4 / s.delta);
  }
}

TEST_CASE("apply_change") {
  SUBCASE("identity") {
    auto out = apply_change(kExample1, CoordinateChange::identity());
    CHECK(out == kExample1);
  }
  SUBCASE("u = 5 on y^2 = x^3 + 5^6") {
    WeierstrassModel m{0, 0, 0, 0, 15625};
    CHECK(padic_valuation(compute_invariants(m).delta, 5) == Valuation(12));
    auto out = apply_change(m, {5, 0, 0, 0});
    CHECK(out == WeierstrassModel{0, 0, 0, 0, 1});
    CHECK(padic_valuation(compute_invariants(out).delta, 5) == Valuation(0));
  }
  SUBCASE("u = 0 rejected") {
    CHECK_THROWS_AS(apply_change(kExample1, {0, 0, 0, 0}), std::domain_error);
  }
  SUBCASE("scaling laws and j-invariance") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> small(-6, 6);
    for (int i = 0; i < 100; ++i) {
      auto m = random_model(rng, 500);
      CoordinateChange c{2, small(rng), small(rng), small(rng)};
      auto s0 = compute_invariants(m);
      auto s1 = compute_invariants(apply_change(m, c));
      Rational u4 = 16, u6 = 64, u12 = Rational(4096);
      CHECK(s1.delta * u12 == s0.delta);
      CHECK(s1.c4 * u4 == s0.c4);
      CHECK(s1.c6 * u6 == s0.c6);
      CHECK(*s1.j == *s0.j);
    }
  }
}

TEST_CASE("coordinate change composition and inverse") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> small(-5, 5);
  for (int i = 0; i < 50; ++i) {
    auto m = random_model(rng, 200);
    long u1 = small(rng);
    if (u1 == 0) u1 = 1;
    CoordinateChange c1{Rational(u1), small(rng), small(rng), small(rng)};
    CoordinateChange c2{Rational(3), small(rng), small(rng), small(rng)};
    auto lhs = apply_change(apply_change(m, c1), c2);
    auto rhs = apply_change(m, c1.then(c2));
    CHECK(lhs == rhs);
    auto back = apply_change(apply_change(m, c1), c1.inverse());
    CHECK(back == m);
  }
}

TEST_CASE("quadratic twist") {
  SUBCASE("d = 1 preserves j") {
    auto tw = quadratic_twist(kExample1, 1);
    CHECK(*compute_invariants(tw).j == example1_j());
  }
  SUBCASE("y^2 = x^3 + x by d = 3 has j = 1728") {
    WeierstrassModel m{0, 0, 0, 1, 0};
    auto tw = quadratic_twist(m, 3);
    CHECK(*compute_invariants(tw).j == 1728);
    CHECK(*compute_invariants(m).j == 1728);
  }
  SUBCASE("fixture twisted by 2 keeps its j") {
    auto tw = quadratic_twist(kExample1, 2);
    CHECK(*compute_invariants(tw).j == example1_j());
  }
  SUBCASE("non-squarefree d rejected") {
    CHECK_THROWS_AS(quadratic_twist(kExample1, 12), std::domain_error);
    CHECK_THROWS_AS(quadratic_twist(kExample1, 0), std::domain_error);
  }
  SUBCASE("double twist returns to the same j") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 50; ++i) {
      auto m = random_model(rng, 300);
      for (Integer d : {Integer(-1), Integer(5), Integer(-6), Integer(30)}) {
        auto twice = quadratic_twist(quadratic_twist(m, d), d);
        CHECK(*compute_invariants(twice).j == *compute_invariants(m).j);
      }
    }
  }
}

TEST_CASE("squarefree helpers") {
  CHECK(is_squarefree(30));
  CHECK_FALSE(is_squarefree(12));
  CHECK(squarefree_part(12) == 3);  // twist by 12 = twist by 3
  CHECK(squarefree_part(-75) == -3);
  CHECK(squarefree_part(30) == 30);
  CHECK(squarefree_part(1) == 1);
}

TEST_CASE("integral_model clears denominators with one scaling") {
  WeierstrassModel m{Rational(1, 2), Rational(3, 4), 0, Rational(-7, 6), 5};
  auto [im, c] = integral_model(m);
  CHECK(im.is_integral());
  CHECK(c.r == 0);
  CHECK(*compute_invariants(im).j == *compute_invariants(m).j);
}
