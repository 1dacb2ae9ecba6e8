#pragma once

#include <string>
#include <vector>

#include "secdiv/moduli.hpp"
#include "secdiv/params.hpp"

namespace secdiv {

/// Neron-Severi class a*theta + b*x on the n-th symmetric product of a
/// genus-g curve.
struct NSClassCn {
  long g = 0;
  long n = 0;
  Rational theta_coeff;
  Rational x_coeff;

  // -x_coeff / theta_coeff; only meaningful when theta_coeff != 0.
  Rational slope() const { return -x_coeff / theta_coeff; }

  friend bool operator==(const NSClassCn&, const NSClassCn&) = default;
};

/// Secant-divisor class count/(g(n^2-1)) * (theta - (g/n) x). The displayed
/// closed-form coefficient and count/(g(n^2-1)) are computed independently
/// and must agree. Requires a nonemptiness condition.
NSClassCn secant_class_cn(const SecantParams& p);

/// The same class derived by pulling the n-pointed moduli class back through
/// the symmetric quotient:
///   nu * ((c_{0:2} - 2 c_psi) theta
///         + ((2g-2) c_psi - (g+n-1)(c_{0:2} - 2 c_psi)) x).
NSClassCn secant_class_cn_via_pullback(const SecantParams& p);

/// Diagonal class -theta + (g+n-1) x.
NSClassCn diagonal_class(long g, long n);

/// r = 1 secant class (n/g) C(g, g-d) (theta - (g/n) x) with n = 2d - g >= 2.
NSClassCn r1_class(long g, long d);

struct SlopeRow {
  long n = 0;
  bool has_divisor = false;
  std::vector<SecantParams> witnesses;
  Rational slope_new;        // g/n
  Rational slope_classical;  // floor(g/n)
  bool strict_improvement = false;
  std::string note;
};

/// One row per n in [n_min, n_max]: whether some secant divisor exists for
/// (g, n), the witnesses, and the slope bound g/n against floor(g/n).
std::vector<SlopeRow> slope_table(long g, long n_min, long n_max,
                                  const EnumerationLimits& limits = {});

}  // namespace secdiv
