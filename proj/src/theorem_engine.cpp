#include "kodaira/theorem_engine.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "kodaira/factorization.hpp"
#include "kodaira/isogeny_catalog.hpp"

namespace kodaira {

bool TypePattern::matches(const KodairaType& t) const {
  switch (kind) {
    case Kind::Exact: return t == exact;
    case Kind::AnyIn: return t.kind() == TypeKind::In;
    case Kind::AnyInstar:
      return t.kind() == TypeKind::Instar || t.kind() == TypeKind::I0star;
  }
  return false;
}

std::string TypePattern::str() const {
  switch (kind) {
    case Kind::Exact: return exact.str();
    case Kind::AnyIn: return "In";
    case Kind::AnyInstar: return "In*";
  }
  return "?";
}

bool AllowedSet::allows(const KodairaType& t) const {
  if (unconstrained) return true;
  bool hit = std::any_of(patterns.begin(), patterns.end(),
                         [&](const TypePattern& p) { return p.matches(t); });
  return complement ? !hit : hit;
}

std::vector<std::string> AllowedSet::pattern_strings() const {
  std::vector<std::string> out;
  if (unconstrained) return {"any"};
  for (const auto& p : patterns) out.push_back(p.str());
  return out;
}

long ComplianceReport::violation_count() const {
  long n = 0;
  for (const auto& pe : per_prime)
    for (const auto& v : pe.verdicts)
      if (v.applicable && !v.compliant) ++n;
  return n;
}

namespace {

void check_ell(long ell) {
  if (ell <= 3 || !is_prime(Integer(ell)))
    throw std::domain_error("isogeny degree must be a prime > 3");
}

AllowedSet exact_set(std::initializer_list<KodairaType> types) {
  AllowedSet s;
  for (const auto& t : types) s.patterns.push_back(TypePattern::of(t));
  return s;
}

TheoremVerdict finish(TheoremVerdict v, const KodairaType& observed) {
  v.observed = observed;
  if (v.applicable) v.compliant = v.allowed.allows(observed);
  return v;
}

}  // namespace

TheoremVerdict theorem1_allowed(long ell, const Integer& p, const KodairaType& t) {
  check_ell(ell);
  TheoremVerdict v;
  long cls = (ell - 1) % 12;
  switch (cls) {
    case 2: case 10: v.rule_id = "T1i"; break;
    case 4: case 8: v.rule_id = "T1ii"; break;
    case 6: v.rule_id = "T1iii"; break;
    default: v.rule_id = "T1"; break;  // (ell-1) = 0 mod 12: no constraint
  }
  if (p <= 3) {
    v.applicable = false;
    v.note = "requires residue characteristic p > 3";
    return finish(std::move(v), t);
  }
  if (p == ell) {
    v.applicable = false;
    v.note = "not applicable at p = ell";
    return finish(std::move(v), t);
  }
  v.applicable = true;
  switch (cls) {
    case 2: case 10:
      v.allowed.patterns = {TypePattern::of(KodairaType::I0()), TypePattern::any_In(),
                            TypePattern::any_Instar()};
      break;
    case 4: case 8:
      v.allowed.patterns = {TypePattern::of(KodairaType::I0()), TypePattern::any_In(),
                            TypePattern::of(KodairaType::III()),
                            TypePattern::of(KodairaType::IIIstar()),
                            TypePattern::any_Instar()};
      break;
    case 6:
      v.allowed.complement = true;
      v.allowed.patterns = {TypePattern::of(KodairaType::III()),
                            TypePattern::of(KodairaType::IIIstar())};
      break;
    default:
      v.allowed.unconstrained = true;
      v.note = "no constraint for (ell-1) = 0 (mod 12)";
      break;
  }
  return finish(std::move(v), t);
}

TheoremVerdict theorem2_check(long ell, const LocalReductionData& d, const ReductionClass& rc) {
  check_ell(ell);
  TheoremVerdict v;
  v.rule_id = "T2";
  v.observed = d.kodaira;
  if (d.p <= 3) {
    v.note = "requires residue characteristic p > 3";
    return v;
  }
  if (d.p == ell) {
    v.note = "not applicable at p = ell";
    return v;
  }
  if (rc.potential != PotentialKind::POTENTIALLY_GOOD) {
    v.note = "requires potentially good reduction";
    return v;
  }
  v.applicable = true;
  v.allowed.unconstrained = true;  // divisibility constraint, not a type set
  long prod = (ell - 1) * d.v_delta_min;
  v.compliant = prod % 12 == 0;
  std::ostringstream note;
  note << "(ell-1) * v(Delta_min) = " << (ell - 1) << " * " << d.v_delta_min << " = " << prod
       << (v.compliant ? " = 0" : " != 0") << " (mod 12)";
  v.note = note.str();
  return v;
}

TheoremVerdict theorem3_allowed(long ell, const Integer& p, const KodairaType& t) {
  check_ell(ell);
  if (p != 2 && p != 3) throw std::domain_error("theorem3_allowed: p must be 2 or 3");
  TheoremVerdict v;
  long cls = (ell - 1) % 12;
  if (p == 2) {
    v.rule_id = "T3i";
    if (cls == 2 || cls == 4 || cls == 8 || cls == 10) {
      v.applicable = true;
      v.allowed.complement = true;
      v.allowed.patterns = {TypePattern::of(KodairaType::IV()),
                            TypePattern::of(KodairaType::IVstar())};
    } else {
      v.note = "no constraint at p = 2 for (ell-1) = " + std::to_string(cls) + " (mod 12)";
    }
  } else {
    v.rule_id = "T3ii";
    if (cls == 2 || cls == 10) {
      v.applicable = true;
      v.allowed.patterns = {TypePattern::of(KodairaType::I0()), TypePattern::any_In(),
                            TypePattern::of(KodairaType::IV()),
                            TypePattern::of(KodairaType::IIstar()),
                            TypePattern::any_Instar()};
    } else {
      v.note = "no constraint at p = 3 for (ell-1) = " + std::to_string(cls) + " (mod 12)";
    }
  }
  return finish(std::move(v), t);
}

TheoremVerdict rational_allowed(long ell, const Integer& p, const KodairaType& t) {
  TheoremVerdict v;
  const AllowedSet good_or_I0star =
      exact_set({KodairaType::I0(), KodairaType::I0star()});
  const AllowedSet mod2_good_class =
      exact_set({KodairaType::I0(), KodairaType::Instar(4), KodairaType::Instar(8),
                 KodairaType::II(), KodairaType::IIstar()});
  v.applicable = true;
  switch (ell) {
    case 19: case 43: case 67: case 163:
      v.rule_id = "T6";
      if (p == 2) v.allowed = mod2_good_class;
      else if (p == ell) v.allowed = exact_set({KodairaType::III(), KodairaType::IIIstar()});
      else v.allowed = good_or_I0star;
      break;
    case 11:
      v.rule_id = "T5";
      if (p == 2) v.allowed = mod2_good_class;
      else if (p == 11)
        v.allowed = exact_set({KodairaType::II(), KodairaType::IIstar(), KodairaType::III(),
                               KodairaType::IIIstar(), KodairaType::IV(),
                               KodairaType::IVstar()});
      else v.allowed = good_or_I0star;
      break;
    case 17:
      v.rule_id = "T8";
      if (p == 2)
        v.allowed = exact_set({KodairaType::In(1), KodairaType::In(17), KodairaType::Instar(5),
                               KodairaType::Instar(9), KodairaType::Instar(21),
                               KodairaType::Instar(25)});
      else if (p == 5) v.allowed = exact_set({KodairaType::III(), KodairaType::IIIstar()});
      else if (p == 17)
        v.allowed = exact_set({KodairaType::II(), KodairaType::IIstar(), KodairaType::IV(),
                               KodairaType::IVstar()});
      else v.allowed = good_or_I0star;
      break;
    case 37:
      v.rule_id = "T7";
      if (p == 2) {
        v.allowed = mod2_good_class;
        v.note = "part (i) of the ell = 37 statement excludes p = 2; mod-2 set taken from "
                 "part (ii)";
      } else if (p == 5)
        v.allowed = exact_set({KodairaType::III(), KodairaType::IIIstar()});
      else if (p == 7)
        v.allowed = exact_set({KodairaType::II(), KodairaType::IVstar()});
      else v.allowed = good_or_I0star;
      break;
    default:
      throw std::domain_error("rational_allowed: unsupported ell " + std::to_string(ell) +
                              "; supported: {11, 17, 19, 37, 43, 67, 163}");
  }
  return finish(std::move(v), t);
}

KodairaType twist_type_map(const KodairaType& t) {
  switch (t.kind()) {
    case TypeKind::I0: return KodairaType::I0star();
    case TypeKind::In: return KodairaType::Instar(t.n());
    case TypeKind::II: return KodairaType::IVstar();
    case TypeKind::III: return KodairaType::IIIstar();
    case TypeKind::IV: return KodairaType::IIstar();
    case TypeKind::I0star: return KodairaType::I0();
    case TypeKind::Instar: return t.n() == 0 ? KodairaType::I0() : KodairaType::In(t.n());
    case TypeKind::IIstar: return KodairaType::IV();
    case TypeKind::IIIstar: return KodairaType::III();
    case TypeKind::IVstar: return KodairaType::II();
  }
  throw std::logic_error("twist_type_map: bad kind");
}

bool twist_mod2_allowed(const KodairaType& original, const KodairaType& candidate) {
  if (original.kind() == TypeKind::I0) {
    return candidate == KodairaType::I0() || candidate == KodairaType::Instar(4) ||
           candidate == KodairaType::Instar(8) || candidate == KodairaType::II() ||
           candidate == KodairaType::IIstar();
  }
  if (original.kind() == TypeKind::In) {
    long n = original.n();
    return candidate == original || candidate == KodairaType::Instar(n + 4) ||
           candidate == KodairaType::Instar(n + 8);
  }
  throw std::domain_error(
      "twist_mod2_allowed: predicate unavailable for original type " + original.str());
}

WeierstrassModel model_from_j(const Rational& j) {
  if (j == 0 || j == 1728)
    throw std::domain_error("model_from_j: j in {0, 1728} is excluded");
  Rational k = j - 1728;
  return WeierstrassModel{1, 0, 0, -36 / k, -1 / k};
}

ComplianceReport verdict(const WeierstrassModel& m, std::optional<long> asserted_ell,
                         const std::string& curve_id) {
  StandardInvariants inv = compute_invariants(m);
  if (inv.delta == 0) throw SingularModelError();
  Rational j = *inv.j;

  ComplianceReport report;
  report.curve_id = curve_id;
  report.j = j;
  report.detected_ells = lookup_ell_by_j(j);
  if (asserted_ell) {
    check_ell(*asserted_ell);
    report.detected_ells.insert(*asserted_ell);
  }

  std::set<Integer> primes;
  for (const auto& p : bad_primes(m)) primes.insert(p);
  primes.insert(2);
  for (long ell : report.detected_ells) primes.insert(Integer(ell));

  const bool special_j = (j == 0 || j == 1728);

  for (const auto& p : primes) {
    ComplianceReport::PrimeEntry entry;
    entry.p = p;
    entry.local = tate_local_data(m, p);
    entry.reduction = reduction_class(entry.local, j);
    const KodairaType& t = entry.local.kodaira;

    for (long ell : report.detected_ells) {
      if (special_j) {
        TheoremVerdict v;
        v.rule_id = "T1";
        v.observed = t;
        v.note = "j in {0, 1728}: quadratic-twist-based analysis not applicable";
        entry.verdicts.push_back(std::move(v));
        continue;
      }
      entry.verdicts.push_back(theorem1_allowed(ell, p, t));
      entry.verdicts.push_back(theorem2_check(ell, entry.local, entry.reduction));
      if (p == 2 || p == 3) entry.verdicts.push_back(theorem3_allowed(ell, p, t));
      if (catalog_supports(ell)) {
        TheoremVerdict v = rational_allowed(ell, p, t);
        if (!lookup_ell_by_j(j).count(ell)) {
          v.note = (v.note.empty() ? "" : v.note + "; ") +
                   std::string("asserted ell; j is not the catalogued value");
        }
        entry.verdicts.push_back(std::move(v));
      } else {
        TheoremVerdict v;
        v.rule_id = "T5-T8";
        v.observed = t;
        v.note = "no over-Q theorem for ell = " + std::to_string(ell) +
                 " (infinitely many j); only the local constraints apply";
        v.applicable = false;
        entry.verdicts.push_back(std::move(v));
      }
    }
    report.per_prime.push_back(std::move(entry));
  }
  return report;
}

}  // namespace kodaira
