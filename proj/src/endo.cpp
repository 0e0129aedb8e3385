#include "autalg/endo.hpp"

namespace autalg {

std::string coeff_text(const Rational& c) { return to_string(c); }

std::string coeff_text(const RatFunc& c, const std::string& var) {
  if (c.is_polynomial()) return c.num().to_string(var);
  return c.to_string(var);
}

}  // namespace autalg
