#pragma once

#include <map>
#include <optional>
#include <string>

#include "secdiv/theta_poly.hpp"

namespace secdiv {

// Square-free generator bits of a normal-form monomial. A monomial is a
// product of a subset of {eta1, eta2, gamma12, gamma13, gamma23} and a
// theta power carried by the coefficient polynomial.
namespace mono {
enum : unsigned {
  e1 = 1u,   // eta1
  e2 = 2u,   // eta2
  g12 = 4u,  // gamma12
  g13 = 8u,  // gamma13
  g23 = 16u, // gamma23
};
std::string str(unsigned mask);
}  // namespace mono

struct MonomialProduct {
  Rational coeff;      // 0 encodes the zero product
  unsigned mask = 0;   // normal-form bits
  long theta_shift = 0;
};

/// Product of two normal-form monomial masks, reduced by
///   eta_i^2 = 0,  eta1*g12 = eta2*g12 = eta1*g13 = eta2*g23 = 0,
///   g12^2 = -2g*eta1*eta2,  g13^2 = -2*eta1*theta,  g23^2 = -2*eta2*theta,
///   g12*g23 = eta2*g13,  g12*g13 = eta1*g23,
/// together with the derived rule eta_i * g13 * g23 = 0. The bare product
/// g13*g23 is outside the supported algebra and throws.
MonomialProduct reduce_monomial_product(unsigned m1, unsigned m2, long genus);

/// Element of the truncated class algebra of (curve) x (curve) x (Picard
/// variety): a sum of normal-form monomials with ThetaPoly coefficients.
class RingElement3 {
 public:
  explicit RingElement3(long genus) : genus_(genus) {}

  static RingElement3 unit(long genus) {
    return monomial(genus, 0, ThetaPoly::constant(genus, Rational(1)));
  }
  static RingElement3 generator(long genus, unsigned mask) {
    return monomial(genus, mask, ThetaPoly::constant(genus, Rational(1)));
  }
  static RingElement3 theta(long genus) {
    ThetaPoly p(genus);
    if (genus >= 1) p[1] = Rational(1);
    return monomial(genus, 0, p);
  }
  static RingElement3 monomial(long genus, unsigned mask, ThetaPoly coeff) {
    RingElement3 e(genus);
    if (!coeff.is_zero()) e.parts_.emplace(mask, std::move(coeff));
    return e;
  }

  long genus() const { return genus_; }
  const std::map<unsigned, ThetaPoly>& parts() const { return parts_; }

  bool is_zero() const { return parts_.empty(); }

  // Coefficient polynomial of a normal-form mask (zero if absent).
  ThetaPoly coefficient(unsigned mask) const {
    auto it = parts_.find(mask);
    return it == parts_.end() ? ThetaPoly(genus_) : it->second;
  }

  // Rational coefficient of the unit monomial (mask 0, theta^0).
  Rational constant_term() const {
    auto it = parts_.find(0);
    return it == parts_.end() ? Rational(0) : it->second[0];
  }

  RingElement3& operator+=(const RingElement3& o);
  RingElement3& operator-=(const RingElement3& o);
  RingElement3& operator*=(const Rational& q);

  friend RingElement3 operator+(RingElement3 x, const RingElement3& y) { return x += y; }
  friend RingElement3 operator-(RingElement3 x, const RingElement3& y) { return x -= y; }
  friend RingElement3 operator*(RingElement3 x, const Rational& q) { return x *= q; }
  friend RingElement3 operator*(const Rational& q, RingElement3 x) { return x *= q; }
  friend RingElement3 operator-(RingElement3 x) { return x *= Rational(-1); }

  RingElement3 operator*(const RingElement3& o) const;

  std::string str() const;

  friend bool operator==(const RingElement3&, const RingElement3&) = default;

 private:
  void add_part(unsigned mask, const ThetaPoly& coeff);
  void prune();

  long genus_;
  std::map<unsigned, ThetaPoly> parts_;
};

/// e^{-x} for nilpotent x (zero constant term); the sum is finite.
RingElement3 exp_neg(const RingElement3& x);

}  // namespace secdiv
