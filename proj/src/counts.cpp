#include "secdiv/counts.hpp"

#include <utility>

#include "secdiv/determinant.hpp"
#include "secdiv/errors.hpp"

namespace secdiv {

namespace {

CountResult make_count(Rational value, FormulaTag tag, long g, long r, long d,
                       VanishingSequence a) {
  if (!is_integer(value))
    throw ConsistencyError("count is not an integer: " + rational_str(value));
  if (value < 0)
    throw ConsistencyError("count is negative: " + rational_str(value));
  return CountResult{std::move(value), tag, g, r, d, std::move(a)};
}

}  // namespace

std::string formula_tag_str(FormulaTag tag) {
  switch (tag) {
    case FormulaTag::general_sum: return "general_sum";
    case FormulaTag::product_special: return "product_special";
    case FormulaTag::interpolation: return "interpolation";
  }
  return "?";
}

CountResult castelnuovo_count(long g, long r, long d, const VanishingSequence& a) {
  if (rho_pointed(g, r, d, a) != -1)
    throw ValidationError(ValidationKind::codimension,
                          "rho(g,r,d,a) must be -1 for " + a.str());
  const auto& e = a.entries;
  const auto kron = [](long i, long j1, long j2) -> long {
    return (i == j1 ? 1 : 0) + (i == j2 ? 1 : 0);
  };

  Rational sum(0);
  for (long j1 = 0; j1 <= r; ++j1) {
    for (long j2 = j1 + 1; j2 <= r; ++j2) {
      const long gap = e[static_cast<std::size_t>(j2)] - e[static_cast<std::size_t>(j1)];
      const long front = gap * gap - 1;
      if (front == 0) continue;

      Integer prod(1);
      for (long i = 0; i <= r && prod != 0; ++i)
        for (long k = i + 1; k <= r; ++k) {
          const long factor = e[static_cast<std::size_t>(k)] - kron(k, j1, j2) -
                              e[static_cast<std::size_t>(i)] + kron(i, j1, j2);
          if (factor == 0) {
            prod = 0;
            break;
          }
          prod *= factor;
        }
      if (prod == 0) continue;

      Rational inv_denoms(1);
      for (long i = 0; i <= r; ++i) {
        inv_denoms *= inv_factorial(g - d + r + e[static_cast<std::size_t>(i)] -
                                    kron(i, j1, j2));
        if (inv_denoms == 0) break;
      }
      if (inv_denoms == 0) continue;

      sum += Rational(front) * prod * inv_denoms;
    }
  }
  return make_count(Rational(factorial(g)) * sum, FormulaTag::general_sum, g, r, d, a);
}

CountResult secant_point_count(const SecantParams& p) {
  const long n = p.n, s = p.s, t = p.t, r = p.r;
  Rational v = Rational(factorial(p.g)) * n * (n * n - 1);
  for (long i = 2; i <= t; ++i) {
    v *= factorial(i) * (n - i);
    v /= factorial(s - 1 + i);
  }
  for (long j = 2; j <= r + 1 - t; ++j) {
    v *= factorial(j) * factorial(n + j);
    v /= factorial(s + n - 1 + j) * factorial(n - t - 1 + j) * (n - 1 + j);
  }
  v /= factorial(s - 1) * factorial(s + n - 1) * factorial(t - 1) * factorial(r - t);
  return make_count(std::move(v), FormulaTag::product_special, p.g, p.r, p.d, p.a);
}

CountResult pointed_secant_count(const SecantParams& p, long delta) {
  if (delta < 0 || delta > p.n)
    throw ValidationError(ValidationKind::delta_range,
                          "delta must lie in 0.." + std::to_string(p.n));
  Rational v = secant_point_count(p).value;
  v *= delta * (p.n * delta - 1);
  v /= p.n * (p.n * p.n - 1);
  return make_count(std::move(v), FormulaTag::interpolation, p.g, p.r, p.d, p.a);
}

Rational vandermonde_delta(const std::vector<long>& b) {
  const long r = static_cast<long>(b.size()) - 1;

  Rational closed(1);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) closed *= b[j] - b[i];
  for (long bk : b) closed *= inv_factorial(bk);

  // Row i from the top holds 1/(b_{r-i} - r)!, ..., 1/b_{r-i}!.
  std::vector<std::vector<Rational>> m(b.size(), std::vector<Rational>(b.size()));
  for (long row = 0; row <= r; ++row)
    for (long col = 0; col <= r; ++col)
      m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
          inv_factorial(b[static_cast<std::size_t>(r - row)] - r + col);
  const Rational det = subset_determinant(m, Rational(0), Rational(1));

  if (det != closed)
    throw ConsistencyError("factorial Vandermonde mismatch: closed form " +
                           rational_str(closed) + " vs determinant " + rational_str(det));
  return closed;
}

}  // namespace secdiv
