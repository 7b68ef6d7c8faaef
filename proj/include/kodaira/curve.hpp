// Weierstrass models over Q, their standard invariants, coordinate changes,
// and quadratic twists.
#pragma once

#include <optional>

#include "kodaira/rational.hpp"

namespace kodaira {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, coefficients in Q.
struct WeierstrassModel {
  Rational a1, a2, a3, a4, a6;

  bool is_integral() const;
  bool operator==(const WeierstrassModel&) const = default;
};

struct StandardInvariants {
  Rational b2, b4, b6, b8;
  Rational c4, c6;
  Rational delta;
  // Undefined (absent) exactly when delta = 0.
  std::optional<Rational> j;
};

// x = u^2 x' + r,  y = u^3 y' + s u^2 x' + t,  u != 0.
struct CoordinateChange {
  Rational u = 1;
  Rational r = 0, s = 0, t = 0;

  static CoordinateChange identity() { return {}; }
  // Applying `this` then `next`.
  CoordinateChange then(const CoordinateChange& next) const;
  CoordinateChange inverse() const;
};

StandardInvariants compute_invariants(const WeierstrassModel& m);

// Transformed model; Delta scales by u^-12, c4 by u^-4, j is unchanged.
WeierstrassModel apply_change(const WeierstrassModel& m, const CoordinateChange& c);

// Quadratic twist by a squarefree nonzero integer d.  The result is a short
// model y^2 = x^3 - 27 c4 d^2 x - 54 c6 d^3; same j-invariant.
WeierstrassModel quadratic_twist(const WeierstrassModel& m, const Integer& d);

// Squarefree part of d (d divided by its largest square divisor), with the
// sign of d; twisting by d and by squarefree_part(d) agree.
Integer squarefree_part(const Integer& d);

bool is_squarefree(const Integer& d);

// Model with fully integral coefficients plus the change that produced it
// (a single u = 1/N scaling).
std::pair<WeierstrassModel, CoordinateChange> integral_model(const WeierstrassModel& m);

}  // namespace kodaira
