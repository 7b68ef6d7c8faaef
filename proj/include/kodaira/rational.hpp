// Exact arithmetic primitives: arbitrary-precision integers/rationals and
// p-adic valuations. Everything here is a thin layer over GMP; no floating
// point anywhere.
#pragma once

#include <gmpxx.h>

#include <limits>
#include <stdexcept>
#include <string>

namespace kodaira {

using Integer = mpz_class;
using Rational = mpq_class;

// Valuation value: an integer or +infinity (the valuation of 0).
// Infinity is absorbing under addition and maximal under comparison.
class Valuation {
 public:
  constexpr Valuation() : finite_(false), value_(0) {}
  constexpr explicit Valuation(long v) : finite_(true), value_(v) {}

  static constexpr Valuation infinity() { return Valuation(); }

  bool is_infinity() const { return !finite_; }
  long value() const {
    if (!finite_) throw std::domain_error("Valuation: value() of infinity");
    return value_;
  }

  friend bool operator==(const Valuation&, const Valuation&) = default;

  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
  friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
  friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }

  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (!a.finite_ || !b.finite_) return infinity();
    return Valuation(a.value_ + b.value_);
  }

  std::string str() const { return finite_ ? std::to_string(value_) : "inf"; }

 private:
  bool finite_;
  long value_;
};

// v_p(n) for a nonzero integer; v_p(0) = infinity.
Valuation padic_valuation(const Integer& n, const Integer& p);

// v_p(q) = v_p(num) - v_p(den).  p must be prime (checked).
Valuation padic_valuation(const Rational& q, const Integer& p);

// Parses an exact rational from "num", "-num", or "num/den".
Rational parse_rational(const std::string& s);

std::string rational_str(const Rational& q);

bool is_prime(const Integer& n);

}  // namespace kodaira
