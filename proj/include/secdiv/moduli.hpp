#pragma once

#include <map>
#include <vector>

#include "secdiv/arith.hpp"
#include "secdiv/counts.hpp"
#include "secdiv/params.hpp"

namespace secdiv {

/// Divisor class on the moduli space of stable 1-pointed genus-g curves in
/// the basis (lambda, psi, delta_irr, delta_1..delta_{g-1}).
struct PicClassM_g1 {
  long genus = 0;
  Rational lambda;
  Rational psi;
  Rational delta_irr;
  std::vector<Rational> delta_i;  // index 0 holds delta_1, ..., index g-2 holds delta_{g-1}

  PicClassM_g1() = default;
  explicit PicClassM_g1(long g)
      : genus(g), delta_i(static_cast<std::size_t>(g > 0 ? g - 1 : 0), Rational(0)) {}

  Rational delta(long i) const { return delta_i.at(static_cast<std::size_t>(i - 1)); }

  PicClassM_g1& operator+=(const PicClassM_g1& o);
  PicClassM_g1& operator*=(const Rational& q);
  friend PicClassM_g1 operator+(PicClassM_g1 x, const PicClassM_g1& y) { return x += y; }
  friend PicClassM_g1 operator*(PicClassM_g1 x, const Rational& q) { return x *= q; }
  friend PicClassM_g1 operator*(const Rational& q, PicClassM_g1 x) { return x *= q; }

  friend bool operator==(const PicClassM_g1&, const PicClassM_g1&) = default;
};

/// Symmetric divisor class on the moduli space of stable n-pointed genus-g
/// curves: a common coefficient for every psi_i, boundary coefficients
/// delta_{0:j} (j = 2..n) and delta_{i:0} (i = 1..g-1). Coefficients of
/// delta_{i:j} with i >= 1, j >= 1 are not computed; the marker keeps that
/// explicit instead of conflating them with zero.
struct PicClassM_gn {
  long genus = 0;
  long npoints = 0;
  Rational lambda;
  Rational psi_each;
  Rational delta_irr;
  std::map<long, Rational> delta_0j;
  std::map<long, Rational> delta_i0;
  bool unknown_ij = true;

  friend bool operator==(const PicClassM_gn&, const PicClassM_gn&) = default;
};

/// mu, nu of the expansion  count/(g(g^2-1)) * (sigma*BN + W), the closed-form
/// sigma, and the underlying count. Construction enforces mu = nu * sigma.
struct PointedBNData {
  Rational mu;
  Rational nu;
  Rational sigma;
  Rational count;
};

/// Raw coefficients of the symmetric secant-divisor class, before expansion
/// into the basis: the common prefactor nu = count/(g(g^2-1)) and the
/// c-coefficients.
struct SecantClassCoefficients {
  Rational count;
  Rational nu;
  Rational sigma;
  Rational c_lambda;
  Rational c_irr;
  Rational c_psi;
  std::map<long, Rational> c_0j;  // j = 2..n
  std::map<long, Rational> c_i0;  // i = 1..g-1
};

/// Pull-back of the Brill-Noether divisor class:
///   (g+3) lambda - (g+1)/6 delta_irr - sum_i i(g-i) delta_i.
PicClassM_g1 bn_class(long g);

/// Closure of the Weierstrass divisor:
///   -lambda + C(g+1,2) psi - sum_i C(g-i+1,2) delta_i.
PicClassM_g1 w_class(long g);

/// Closed-form sigma of the pointed Brill-Noether class; 0 for g = 2.
Rational sigma_coeff(const SecantParams& p);

/// mu and nu via the test-curve formula (mu uses genus-(g-1) counts over the
/// shifted vanishing sequences). Throws for g = 2.
PointedBNData mu_nu(const SecantParams& p);

/// count/(g(g^2-1)) * (sigma * BN + W) expanded in the standard basis.
PicClassM_g1 pointed_bn_class(const SecantParams& p);

SecantClassCoefficients secant_class_coefficients(const SecantParams& p);

/// The symmetric secant-divisor class on n-pointed moduli, expanded from
/// secant_class_coefficients. Requires a nonemptiness condition to hold.
PicClassM_gn secant_class_mgn(const SecantParams& p);

}  // namespace secdiv
