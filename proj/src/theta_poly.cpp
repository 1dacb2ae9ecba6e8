#include "secdiv/theta_poly.hpp"

#include <sstream>

namespace secdiv {

std::string ThetaPoly::str(const std::string& var) const {
  std::ostringstream out;
  bool first = true;
  for (long i = 0; i <= genus_; ++i) {
    const Rational& c = coef_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) out << " + ";
    out << rational_str(c);
    if (i >= 1) out << "*" << var;
    if (i >= 2) out << "^" << i;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace secdiv
