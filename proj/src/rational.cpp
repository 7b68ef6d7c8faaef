#include "kodaira/rational.hpp"

namespace kodaira {

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  // 50 rounds of BPSW/Miller-Rabin; "definitely prime" for small inputs.
  return mpz_probab_prime_p(n.get_mpz_t(), 50) != 0;
}

Valuation padic_valuation(const Integer& n, const Integer& p) {
  if (!is_prime(p)) throw std::domain_error("padic_valuation: p is not prime");
  if (n == 0) return Valuation::infinity();
  Integer reduced;
  mp_bitcnt_t v = mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return Valuation(static_cast<long>(v));
}

Valuation padic_valuation(const Rational& q, const Integer& p) {
  if (!is_prime(p)) throw std::domain_error("padic_valuation: p is not prime");
  if (q == 0) return Valuation::infinity();
  Integer num = q.get_num(), den = q.get_den();
  Integer tmp;
  long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()));
  long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
  return Valuation(vn - vd);
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("parse_rational: bad rational '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) {
  return q.get_str();
}

}  // namespace kodaira
