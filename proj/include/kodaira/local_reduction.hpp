// Per-prime minimal models and Tate's algorithm over Q, with the fast
// (v(c4), v(Delta)) classification for p >= 5.
#pragma once

#include "kodaira/curve.hpp"
#include "kodaira/kodaira_type.hpp"
#include "kodaira/rational.hpp"

namespace kodaira {

struct SingularModelError : std::domain_error {
  SingularModelError() : std::domain_error("singular model (Delta = 0)") {}
};

struct ClassificationError : std::domain_error {
  explicit ClassificationError(const std::string& what) : std::domain_error(what) {}
};

struct LocalReductionData {
  Integer p;
  WeierstrassModel minimal_model;
  // Change taking the input model to minimal_model.
  CoordinateChange change;
  long v_delta_min = 0;
  Valuation v_c4_min;
  KodairaType kodaira;
  long conductor_exponent = 0;  // f
  long tamagawa = 1;            // c
  ReductionClass reduction;
};

// Minimal model at p and the change linking input to output.  For p >= 5
// minimality is equivalent to v_p(c4) < 4 or v_p(Delta) < 12.
std::pair<WeierstrassModel, CoordinateChange> minimal_model_at(const WeierstrassModel& m,
                                                               const Integer& p);

// The standard table for p >= 5, on valuations taken from a p-minimal model.
// Inconsistent pairs raise ClassificationError.
KodairaType kodaira_from_valuations(const Valuation& v_c4, long v_delta);

// Full Tate algorithm; valid at every prime including 2 and 3.  Non-minimal
// input is re-minimalized internally and the applied change is recorded.
LocalReductionData tate_local_data(const WeierstrassModel& m, const Integer& p);

// GOOD iff I0, MULTIPLICATIVE iff In (n >= 1), ADDITIVE otherwise;
// potentially good iff v_p(j) >= 0.
ReductionClass reduction_class(const LocalReductionData& d, const Rational& j);

}  // namespace kodaira
