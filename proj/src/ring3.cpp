#include "secdiv/ring3.hpp"

#include <sstream>

#include "secdiv/errors.hpp"

namespace secdiv {

namespace mono {

std::string str(unsigned mask) {
  if (mask == 0) return "1";
  std::string out;
  const auto append = [&out](const char* name) {
    if (!out.empty()) out += "*";
    out += name;
  };
  if (mask & e1) append("eta1");
  if (mask & e2) append("eta2");
  if (mask & g12) append("g12");
  if (mask & g13) append("g13");
  if (mask & g23) append("g23");
  return out;
}

}  // namespace mono

MonomialProduct reduce_monomial_product(unsigned m1, unsigned m2, long genus) {
  // Multiplicities of each generator in the raw product.
  int e1 = (m1 >> 0 & 1) + (m2 >> 0 & 1);
  int e2 = (m1 >> 1 & 1) + (m2 >> 1 & 1);
  int g12 = (m1 >> 2 & 1) + (m2 >> 2 & 1);
  int g13 = (m1 >> 3 & 1) + (m2 >> 3 & 1);
  int g23 = (m1 >> 4 & 1) + (m2 >> 4 & 1);

  MonomialProduct out{Rational(1), 0, 0};
  const auto zero = [&out] {
    out.coeff = 0;
    out.mask = 0;
    out.theta_shift = 0;
    return out;
  };

  for (bool changed = true; changed;) {
    changed = false;
    if (e1 >= 2 || e2 >= 2) return zero();
    if (g12 >= 2) {
      out.coeff *= -2 * genus;
      g12 -= 2;
      ++e1;
      ++e2;
      changed = true;
      continue;
    }
    if (g13 >= 2) {
      out.coeff *= -2;
      ++out.theta_shift;
      g13 -= 2;
      ++e1;
      changed = true;
      continue;
    }
    if (g23 >= 2) {
      out.coeff *= -2;
      ++out.theta_shift;
      g23 -= 2;
      ++e2;
      changed = true;
      continue;
    }
    if (g12 >= 1 && (e1 >= 1 || e2 >= 1)) return zero();
    if (g13 >= 1 && e1 >= 1) return zero();
    if (g23 >= 1 && e2 >= 1) return zero();
    if (g12 >= 1 && g13 >= 1) {
      --g12;
      --g13;
      ++e1;
      ++g23;
      changed = true;
      continue;
    }
    if (g12 >= 1 && g23 >= 1) {
      --g12;
      --g23;
      ++e2;
      ++g13;
      changed = true;
      continue;
    }
    if (g13 >= 1 && g23 >= 1) {
      // eta_i * g13 * g23 = 0 follows from g12*g13 = eta1*g23 and the square
      // relations; the eta-free product is not determined by the relations.
      if (e1 >= 1 || e2 >= 1) return zero();
      throw UnreducibleMonomialError(
          "product " + mono::str(m1) + " * " + mono::str(m2) +
          " reaches the unsupported monomial g13*g23");
    }
  }

  out.mask = (e1 ? mono::e1 : 0u) | (e2 ? mono::e2 : 0u) | (g12 ? mono::g12 : 0u) |
             (g13 ? mono::g13 : 0u) | (g23 ? mono::g23 : 0u);
  return out;
}

void RingElement3::add_part(unsigned mask, const ThetaPoly& coeff) {
  auto [it, inserted] = parts_.try_emplace(mask, coeff);
  if (!inserted) it->second += coeff;
}

void RingElement3::prune() {
  for (auto it = parts_.begin(); it != parts_.end();)
    it = it->second.is_zero() ? parts_.erase(it) : std::next(it);
}

RingElement3& RingElement3::operator+=(const RingElement3& o) {
  for (const auto& [mask, coeff] : o.parts_) add_part(mask, coeff);
  prune();
  return *this;
}

RingElement3& RingElement3::operator-=(const RingElement3& o) {
  for (const auto& [mask, coeff] : o.parts_) add_part(mask, -coeff);
  prune();
  return *this;
}

RingElement3& RingElement3::operator*=(const Rational& q) {
  if (q == 0) {
    parts_.clear();
    return *this;
  }
  for (auto& [mask, coeff] : parts_) coeff *= q;
  return *this;
}

RingElement3 RingElement3::operator*(const RingElement3& o) const {
  RingElement3 out(genus_);
  for (const auto& [m1, p1] : parts_)
    for (const auto& [m2, p2] : o.parts_) {
      const MonomialProduct red = reduce_monomial_product(m1, m2, genus_);
      if (red.coeff == 0) continue;
      ThetaPoly coeff = (p1 * p2).shifted(red.theta_shift) * red.coeff;
      if (!coeff.is_zero()) out.add_part(red.mask, coeff);
    }
  out.prune();
  return out;
}

std::string RingElement3::str() const {
  if (parts_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mask, coeff] : parts_) {
    if (!first) out << " + ";
    out << "(" << coeff.str() << ")";
    if (mask != 0) out << "*" << mono::str(mask);
    first = false;
  }
  return out.str();
}

RingElement3 exp_neg(const RingElement3& x) {
  if (x.constant_term() != 0)
    throw ValidationError(ValidationKind::range,
                          "exp_neg requires a nilpotent argument (zero constant term)");
  RingElement3 result = RingElement3::unit(x.genus());
  RingElement3 power = RingElement3::unit(x.genus());
  const long bound = 2 * x.genus() + 16;
  for (long k = 1; k <= bound; ++k) {
    power = power * x;
    if (power.is_zero()) return result;
    Rational scale = inv_factorial(k);
    if (k % 2 != 0) scale = -scale;
    result += power * scale;
  }
  throw ConsistencyError("exp_neg: series failed to terminate");
}

}  // namespace secdiv
