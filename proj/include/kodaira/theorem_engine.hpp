// Executable admissibility predicates for the reduction-type constraints
// attached to prime-degree rational isogenies, plus per-curve compliance
// verdicts.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kodaira/curve.hpp"
#include "kodaira/kodaira_type.hpp"
#include "kodaira/local_reduction.hpp"

namespace kodaira {

// A symbolic pattern over Kodaira types: an exact type, "In for any n >= 1",
// or "In* for any n >= 0".
struct TypePattern {
  enum class Kind { Exact, AnyIn, AnyInstar };
  Kind kind = Kind::Exact;
  KodairaType exact;

  static TypePattern of(KodairaType t) { return {Kind::Exact, t}; }
  static TypePattern any_In() { return {Kind::AnyIn, {}}; }
  static TypePattern any_Instar() { return {Kind::AnyInstar, {}}; }

  bool matches(const KodairaType& t) const;
  std::string str() const;
};

// Either a positive list of patterns or the complement of one.
struct AllowedSet {
  bool complement = false;  // true: everything except `patterns`
  std::vector<TypePattern> patterns;

  bool unconstrained = false;  // admits every type, renders as "any"

  bool allows(const KodairaType& t) const;
  std::vector<std::string> pattern_strings() const;
};

struct TheoremVerdict {
  std::string rule_id;  // T1i, T1ii, T1iii, T2, T3i, T3ii, T5, T6, T7, T8, L31, L32
  bool applicable = false;
  AllowedSet allowed;
  std::optional<KodairaType> observed;
  bool compliant = true;  // defined only when applicable
  std::string note;
};

struct ComplianceReport {
  std::string curve_id;
  Rational j;
  std::set<long> detected_ells;
  struct PrimeEntry {
    Integer p;
    LocalReductionData local;
    ReductionClass reduction;
    std::vector<TheoremVerdict> verdicts;
  };
  std::vector<PrimeEntry> per_prime;  // sorted by prime

  long violation_count() const;
};

// Local-field constraint keyed to (ell - 1) mod 12, valid for p > 3, p != ell.
TheoremVerdict theorem1_allowed(long ell, const Integer& p, const KodairaType& t);

// 12 | (ell - 1) v(Delta_min) for potentially good reduction, p > 3, p != ell.
TheoremVerdict theorem2_check(long ell, const LocalReductionData& d, const ReductionClass& rc);

// Residue characteristic 2 and 3 constraints (absolutely unramified base).
TheoremVerdict theorem3_allowed(long ell, const Integer& p, const KodairaType& t);

// Over-Q allowed sets for the catalogued ell, per (ell, p) cell.
TheoremVerdict rational_allowed(long ell, const Integer& p, const KodairaType& t);

// Reduction type of the quadratic twist at an odd prime dividing d.
// Total and involutive on the ten kinds.
KodairaType twist_type_map(const KodairaType& t);

// Mod-2 twist constraint; defined only for original I0 or In.
// Throws std::domain_error for other originals (no rule is available).
bool twist_mod2_allowed(const KodairaType& original, const KodairaType& candidate);

// A model with the given j-invariant, exactly; j must avoid 0 and 1728.
WeierstrassModel model_from_j(const Rational& j);

// Runs every applicable check at every bad prime of the minimal discriminant
// (plus 2 and the detected/asserted ells even when good).
ComplianceReport verdict(const WeierstrassModel& m, std::optional<long> asserted_ell,
                         const std::string& curve_id = "");

}  // namespace kodaira
