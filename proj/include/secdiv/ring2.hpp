#pragma once

#include <string>

#include "secdiv/theta_poly.hpp"

namespace secdiv {

/// Element A(th) + eta*B(th) + gamma*C(th) of the truncated class algebra of
/// (curve) x (Picard variety), subject to
///   eta^2 = eta*gamma = gamma^3 = 0,  gamma^2 = -2*eta*theta,  theta^{g+1} = 0.
/// The product law in these coordinates is
///   (A,B,C)(A',B',C') = (AA', AB' + A'B - 2*theta*CC', AC' + A'C).
struct RingElement2 {
  long genus;
  ThetaPoly a;  // unit part
  ThetaPoly b;  // eta coefficient
  ThetaPoly c;  // gamma coefficient

  explicit RingElement2(long g) : genus(g), a(g), b(g), c(g) {}
  RingElement2(ThetaPoly a_, ThetaPoly b_, ThetaPoly c_)
      : genus(a_.genus()), a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}

  static RingElement2 unit(long g) {
    RingElement2 e(g);
    e.a = ThetaPoly::constant(g, Rational(1));
    return e;
  }

  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }

  RingElement2& operator+=(const RingElement2& o) {
    a += o.a;
    b += o.b;
    c += o.c;
    return *this;
  }
  RingElement2& operator-=(const RingElement2& o) {
    a -= o.a;
    b -= o.b;
    c -= o.c;
    return *this;
  }
  RingElement2& operator*=(const Rational& q) {
    a *= q;
    b *= q;
    c *= q;
    return *this;
  }

  friend RingElement2 operator+(RingElement2 x, const RingElement2& y) { return x += y; }
  friend RingElement2 operator-(RingElement2 x, const RingElement2& y) { return x -= y; }
  friend RingElement2 operator*(RingElement2 x, const Rational& q) { return x *= q; }
  friend RingElement2 operator*(const Rational& q, RingElement2 x) { return x *= q; }
  friend RingElement2 operator-(RingElement2 x) { return x *= Rational(-1); }

  RingElement2 operator*(const RingElement2& o) const {
    RingElement2 out(genus);
    out.a = a * o.a;
    out.b = a * o.b + o.a * b - (c * o.c).shifted(1) * Rational(2);
    out.c = a * o.c + o.a * c;
    return out;
  }

  std::string str() const;

  friend bool operator==(const RingElement2&, const RingElement2&) = default;
};

/// Degree functional: g! times the theta^g coefficient of the eta part.
/// The unit and gamma parts integrate to zero.
Rational degree_integral(const RingElement2& x);

/// Homogeneous degree-k piece under deg(eta) = deg(gamma) = deg(theta) = 1.
RingElement2 graded_piece(const RingElement2& x, long k);

/// sum_{i=0}^{g} theta^i / i!  (the truncated exponential of theta).
RingElement2 exp_theta(long genus);

}  // namespace secdiv
