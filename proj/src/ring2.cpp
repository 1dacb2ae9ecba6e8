#include "secdiv/ring2.hpp"

#include <sstream>

namespace secdiv {

std::string RingElement2::str() const {
  std::ostringstream out;
  bool any = false;
  if (!a.is_zero()) {
    out << a.str();
    any = true;
  }
  if (!b.is_zero()) {
    if (any) out << " + ";
    out << "eta*(" << b.str() << ")";
    any = true;
  }
  if (!c.is_zero()) {
    if (any) out << " + ";
    out << "gamma*(" << c.str() << ")";
    any = true;
  }
  if (!any) out << "0";
  return out.str();
}

Rational degree_integral(const RingElement2& x) {
  return Rational(factorial(x.genus)) * x.b[x.genus];
}

RingElement2 graded_piece(const RingElement2& x, long k) {
  RingElement2 out(x.genus);
  if (k >= 0 && k <= x.genus) out.a[k] = x.a[k];
  if (k >= 1 && k - 1 <= x.genus) {
    out.b[k - 1] = x.b[k - 1];
    out.c[k - 1] = x.c[k - 1];
  }
  return out;
}

RingElement2 exp_theta(long genus) {
  RingElement2 out(genus);
  for (long i = 0; i <= genus; ++i) out.a[i] = inv_factorial(i);
  return out;
}

}  // namespace secdiv
