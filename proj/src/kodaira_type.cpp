#include "kodaira/kodaira_type.hpp"

namespace kodaira {

KodairaType KodairaType::parse(const std::string& s) {
  if (s == "II") return II();
  if (s == "III") return III();
  if (s == "IV") return IV();
  if (s == "II*") return IIstar();
  if (s == "III*") return IIIstar();
  if (s == "IV*") return IVstar();
  if (s.size() >= 2 && s[0] == 'I') {
    bool star = s.back() == '*';
    std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
      long n = std::stol(digits);
      return star ? Instar(n) : (n == 0 ? I0() : In(n));
    }
  }
  throw std::invalid_argument("KodairaType: cannot parse '" + s + "'");
}

}  // namespace kodaira
