#include "kodaira/curve.hpp"

#include "kodaira/factorization.hpp"

namespace kodaira {

bool WeierstrassModel::is_integral() const {
  return a1.get_den() == 1 && a2.get_den() == 1 && a3.get_den() == 1 &&
         a4.get_den() == 1 && a6.get_den() == 1;
}

StandardInvariants compute_invariants(const WeierstrassModel& m) {
  StandardInvariants s;
  s.b2 = m.a1 * m.a1 + 4 * m.a2;
  s.b4 = 2 * m.a4 + m.a1 * m.a3;
  s.b6 = m.a3 * m.a3 + 4 * m.a6;
  s.b8 = m.a1 * m.a1 * m.a6 + 4 * m.a2 * m.a6 - m.a1 * m.a3 * m.a4 +
         m.a2 * m.a3 * m.a3 - m.a4 * m.a4;
  s.c4 = s.b2 * s.b2 - 24 * s.b4;
  s.c6 = -s.b2 * s.b2 * s.b2 + 36 * s.b2 * s.b4 - 216 * s.b6;
  s.delta = -s.b2 * s.b2 * s.b8 - 8 * s.b4 * s.b4 * s.b4 - 27 * s.b6 * s.b6 +
            9 * s.b2 * s.b4 * s.b6;
  if (s.delta != 0) s.j = s.c4 * s.c4 * s.c4 / s.delta;
  return s;
}

CoordinateChange CoordinateChange::then(const CoordinateChange& c2) const {
  CoordinateChange out;
  out.u = u * c2.u;
  out.r = u * u * c2.r + r;
  out.s = u * c2.s + s;
  out.t = u * u * u * c2.t + u * u * s * c2.r + t;
  return out;
}

CoordinateChange CoordinateChange::inverse() const {
  // Solve (this).then(inv) = identity.
  CoordinateChange inv;
  inv.u = 1 / u;
  inv.r = -r / (u * u);
  inv.s = -s / u;
  inv.t = (r * s - t) / (u * u * u);
  return inv;
}

WeierstrassModel apply_change(const WeierstrassModel& m, const CoordinateChange& c) {
  if (c.u == 0) throw std::domain_error("apply_change: u = 0");
  const Rational &u = c.u, &r = c.r, &s = c.s, &t = c.t;
  WeierstrassModel out;
  Rational u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
  out.a1 = (m.a1 + 2 * s) / u;
  out.a2 = (m.a2 - s * m.a1 + 3 * r - s * s) / u2;
  out.a3 = (m.a3 + r * m.a1 + 2 * t) / u3;
  out.a4 = (m.a4 - s * m.a3 + 2 * r * m.a2 - (t + r * s) * m.a1 + 3 * r * r - 2 * s * t) / u4;
  out.a6 = (m.a6 + r * m.a4 + r * r * m.a2 + r * r * r - t * m.a3 - t * t - r * t * m.a1) / u6;
  return out;
}

bool is_squarefree(const Integer& d) {
  if (d == 0) return false;
  Integer a = abs(d);
  if (a == 1) return true;
  for (const auto& [p, e] : factorize(a))
    if (e > 1) return false;
  return true;
}

Integer squarefree_part(const Integer& d) {
  if (d == 0) throw std::domain_error("squarefree_part: d = 0");
  Integer a = abs(d), out = 1;
  for (const auto& [p, e] : factorize(a))
    if (e % 2 == 1) out *= p;
  return d < 0 ? -out : out;
}

WeierstrassModel quadratic_twist(const WeierstrassModel& m, const Integer& d) {
  if (d == 0) throw std::domain_error("quadratic_twist: d = 0");
  if (!is_squarefree(d)) throw std::domain_error("quadratic_twist: d is not squarefree");
  StandardInvariants s = compute_invariants(m);
  Rational d2(d * d), d3(d * d * d);
  return WeierstrassModel{0, 0, 0, -27 * s.c4 * d2, -54 * s.c6 * d3};
}

std::pair<WeierstrassModel, CoordinateChange> integral_model(const WeierstrassModel& m) {
  Integer n = 1;
  mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), m.a1.get_den().get_mpz_t());
  mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), m.a2.get_den().get_mpz_t());
  mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), m.a3.get_den().get_mpz_t());
  mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), m.a4.get_den().get_mpz_t());
  mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), m.a6.get_den().get_mpz_t());
  CoordinateChange c;
  c.u = Rational(1, n);
  return {apply_change(m, c), c};
}

}  // namespace kodaira
