#include "theta/phase.hpp"

#include <sstream>

namespace theta {

namespace {

std::string mu_power_str(int k) {
  if (k == 1) return "mu";
  if (k == -1) return "mubar";
  return "mu^" + std::to_string(k);
}

// "q", "q*mu^k", "mu", "-mubar", ...
std::string single_term_str(int k, const Rational& q) {
  if (k == 0) return rational_str(q);
  if (q == 1) return mu_power_str(k);
  if (q == -1) return "-" + mu_power_str(k);
  return rational_str(q) + "*" + mu_power_str(k);
}

} // namespace

std::string PhaseCoefficient::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    std::string piece = single_term_str(it->first, it->second);
    if (first) {
      os << piece;
      first = false;
    } else if (!piece.empty() && piece[0] == '-') {
      os << " - " << piece.substr(1);
    } else {
      os << " + " << piece;
    }
  }
  return os.str();
}

} // namespace theta
