#pragma once

#include <stdexcept>
#include <string>

namespace kodaira {

enum class TypeKind {
  I0,
  In,      // n >= 1
  II,
  III,
  IV,
  I0star,
  Instar,  // n >= 0; Instar(0) renders as "I0*" and equals I0star
  IVstar,
  IIIstar,
  IIstar,
};

// Symbolic reduction type.  In carries n >= 1 (I_0 is canonicalized to I0);
// Instar carries n >= 0 (Instar(0) is canonicalized to I0star).
class KodairaType {
 public:
  KodairaType() : kind_(TypeKind::I0), n_(0) {}
  explicit KodairaType(TypeKind k, long n = 0) : kind_(k), n_(n) {
    if (k == TypeKind::In) {
      if (n == 0) { kind_ = TypeKind::I0; n_ = 0; }
      else if (n < 0) throw std::domain_error("KodairaType: In needs n >= 1");
    } else if (k == TypeKind::Instar) {
      if (n == 0) { kind_ = TypeKind::I0star; n_ = 0; }
      else if (n < 0) throw std::domain_error("KodairaType: Instar needs n >= 0");
    } else {
      n_ = 0;
    }
    if (k == TypeKind::I0star) n_ = 0;
  }

  static KodairaType I0() { return KodairaType(TypeKind::I0); }
  static KodairaType In(long n) { return KodairaType(TypeKind::In, n); }
  static KodairaType II() { return KodairaType(TypeKind::II); }
  static KodairaType III() { return KodairaType(TypeKind::III); }
  static KodairaType IV() { return KodairaType(TypeKind::IV); }
  static KodairaType I0star() { return KodairaType(TypeKind::I0star); }
  static KodairaType Instar(long n) { return KodairaType(TypeKind::Instar, n); }
  static KodairaType IVstar() { return KodairaType(TypeKind::IVstar); }
  static KodairaType IIIstar() { return KodairaType(TypeKind::IIIstar); }
  static KodairaType IIstar() { return KodairaType(TypeKind::IIstar); }

  TypeKind kind() const { return kind_; }
  long n() const { return n_; }

  bool is_semistable() const { return kind_ == TypeKind::I0 || kind_ == TypeKind::In; }
  bool is_additive() const { return !is_semistable(); }

  // Number of irreducible components of the special fiber (with multiplicity
  // ignored), as used in Ogg's formula v(Delta) = f + m - 1.
  long components() const {
    switch (kind_) {
      case TypeKind::I0: return 1;
      case TypeKind::In: return n_;
      case TypeKind::II: return 1;
      case TypeKind::III: return 2;
      case TypeKind::IV: return 3;
      case TypeKind::I0star: return 5;
      case TypeKind::Instar: return 5 + n_;
      case TypeKind::IVstar: return 7;
      case TypeKind::IIIstar: return 8;
      case TypeKind::IIstar: return 9;
    }
    throw std::logic_error("KodairaType: bad kind");
  }

  // "I0", "I5", "II*", "I3*", ...
  std::string str() const {
    switch (kind_) {
      case TypeKind::I0: return "I0";
      case TypeKind::In: return "I" + std::to_string(n_);
      case TypeKind::II: return "II";
      case TypeKind::III: return "III";
      case TypeKind::IV: return "IV";
      case TypeKind::I0star: return "I0*";
      case TypeKind::Instar: return "I" + std::to_string(n_) + "*";
      case TypeKind::IVstar: return "IV*";
      case TypeKind::IIIstar: return "III*";
      case TypeKind::IIstar: return "II*";
    }
    throw std::logic_error("KodairaType: bad kind");
  }

  static KodairaType parse(const std::string& s);

  bool operator==(const KodairaType&) const = default;

 private:
  TypeKind kind_;
  long n_;
};

enum class ReductionKind { GOOD, MULTIPLICATIVE, ADDITIVE };
enum class PotentialKind { POTENTIALLY_GOOD, POTENTIALLY_MULTIPLICATIVE };

struct ReductionClass {
  ReductionKind kind;
  PotentialKind potential;
  bool operator==(const ReductionClass&) const = default;
};

inline std::string reduction_kind_str(ReductionKind k) {
  switch (k) {
    case ReductionKind::GOOD: return "good";
    case ReductionKind::MULTIPLICATIVE: return "multiplicative";
    case ReductionKind::ADDITIVE: return "additive";
  }
  return "?";
}

inline std::string potential_kind_str(PotentialKind k) {
  return k == PotentialKind::POTENTIALLY_GOOD ? "potentially_good"
                                              : "potentially_multiplicative";
}

}  // namespace kodaira
