#pragma once

#include <string>
#include <vector>

#include "secdiv/arith.hpp"

namespace secdiv {

/// Polynomial in the theta class with rational coefficients, truncated by
/// theta^{g+1} = 0. Coefficients are stored densely for degrees 0..g.
class ThetaPoly {
 public:
  explicit ThetaPoly(long genus)
      : genus_(genus), coef_(static_cast<std::size_t>(genus) + 1, Rational(0)) {}

  static ThetaPoly constant(long genus, const Rational& c) {
    ThetaPoly p(genus);
    p.coef_[0] = c;
    return p;
  }

  // theta^j / j!; the zero polynomial when j < 0 or j > genus.
  static ThetaPoly theta_power_over_factorial(long genus, long j) {
    ThetaPoly p(genus);
    if (j >= 0 && j <= genus) p.coef_[static_cast<std::size_t>(j)] = inv_factorial(j);
    return p;
  }

  long genus() const { return genus_; }

  const Rational& operator[](long i) const { return coef_[static_cast<std::size_t>(i)]; }
  Rational& operator[](long i) { return coef_[static_cast<std::size_t>(i)]; }

  bool is_zero() const {
    for (const auto& c : coef_)
      if (c != 0) return false;
    return true;
  }

  ThetaPoly& operator+=(const ThetaPoly& o) {
    for (long i = 0; i <= genus_; ++i) coef_[static_cast<std::size_t>(i)] += o[i];
    return *this;
  }
  ThetaPoly& operator-=(const ThetaPoly& o) {
    for (long i = 0; i <= genus_; ++i) coef_[static_cast<std::size_t>(i)] -= o[i];
    return *this;
  }
  ThetaPoly& operator*=(const Rational& c) {
    for (auto& x : coef_) x *= c;
    return *this;
  }

  friend ThetaPoly operator+(ThetaPoly a, const ThetaPoly& b) { return a += b; }
  friend ThetaPoly operator-(ThetaPoly a, const ThetaPoly& b) { return a -= b; }
  friend ThetaPoly operator*(ThetaPoly a, const Rational& c) { return a *= c; }
  friend ThetaPoly operator*(const Rational& c, ThetaPoly a) { return a *= c; }
  friend ThetaPoly operator-(ThetaPoly a) { return a *= Rational(-1); }

  ThetaPoly operator*(const ThetaPoly& o) const {
    ThetaPoly out(genus_);
    for (long i = 0; i <= genus_; ++i) {
      if (coef_[static_cast<std::size_t>(i)] == 0) continue;
      for (long j = 0; i + j <= genus_; ++j)
        out[i + j] += coef_[static_cast<std::size_t>(i)] * o[j];
    }
    return out;
  }

  // Multiplication by theta^k; degrees beyond g truncate to zero.
  ThetaPoly shifted(long k) const {
    ThetaPoly out(genus_);
    for (long i = 0; i + k <= genus_; ++i)
      if (i + k >= 0) out[i + k] = coef_[static_cast<std::size_t>(i)];
    return out;
  }

  std::string str(const std::string& var = "th") const;

  friend bool operator==(const ThetaPoly&, const ThetaPoly&) = default;

 private:
  long genus_;
  std::vector<Rational> coef_;
};

}  // namespace secdiv
