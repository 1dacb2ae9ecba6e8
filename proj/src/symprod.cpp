#include "secdiv/symprod.hpp"

#include "secdiv/counts.hpp"
#include "secdiv/errors.hpp"

namespace secdiv {

NSClassCn secant_class_cn(const SecantParams& p) {
  if (nonempty_conditions(p).empty())
    throw ValidationError(ValidationKind::nonempty,
                          "no nonemptiness condition holds for " + p.str());

  const long g = p.g, r = p.r, t = p.t, n = p.n, s = p.s;

  // Displayed closed-form coefficient, transcribed independently of the
  // point-count product.
  Rational displayed = Rational(factorial(g)) * n;
  for (long i = 2; i <= t; ++i) {
    displayed *= factorial(i) * (n - i);
    displayed /= factorial(s - 1 + i);
  }
  for (long j = 2; j <= r + 1 - t; ++j) {
    displayed *= factorial(j) * factorial(n + j);
    displayed /= factorial(s + n - 1 + j) * factorial(n - t - 1 + j) * (n - 1 + j);
  }
  displayed /= Rational(g) * factorial(s - 1) * factorial(s + n - 1) *
               factorial(t - 1) * factorial(r - t);

  const Rational count = secant_point_count(p).value;
  const Rational from_count = count / (Rational(g) * (n * n - 1));
  if (displayed != from_count)
    throw ConsistencyError("secant class coefficient mismatch at " + p.str() + ": " +
                           rational_str(displayed) + " vs " + rational_str(from_count));

  NSClassCn cls;
  cls.g = g;
  cls.n = n;
  cls.theta_coeff = from_count;
  cls.x_coeff = -count / (Rational(n) * (n * n - 1));
  return cls;
}

NSClassCn secant_class_cn_via_pullback(const SecantParams& p) {
  // Pull-back relations through the symmetric quotient:
  //   delta_{0:2} restricts to -theta + (g+n-1) x, the symmetrized cotangent
  //   class to (2g-2) x; its pre-symmetrization is sum_i psi_i - sum_j j delta_{0:j}.
  const SecantClassCoefficients k = secant_class_coefficients(p);
  const Rational mixed = k.c_0j.at(2) - 2 * k.c_psi;
  NSClassCn cls;
  cls.g = p.g;
  cls.n = p.n;
  cls.theta_coeff = k.nu * mixed;
  cls.x_coeff = k.nu * (Rational(2 * p.g - 2) * k.c_psi - (p.g + p.n - 1) * mixed);
  return cls;
}

NSClassCn diagonal_class(long g, long n) {
  NSClassCn cls;
  cls.g = g;
  cls.n = n;
  cls.theta_coeff = -1;
  cls.x_coeff = g + n - 1;
  return cls;
}

NSClassCn r1_class(long g, long d) {
  const long n = 2 * d - g;
  if (n < 2)
    throw ValidationError(ValidationKind::range,
                          "r1 class needs n = 2d - g >= 2, got n = " + std::to_string(n));
  const Rational scale = make_rational(Integer(n), Integer(g)) * binomial(g, g - d);
  NSClassCn cls;
  cls.g = g;
  cls.n = n;
  cls.theta_coeff = scale;
  cls.x_coeff = -scale * g / n;
  return cls;
}

std::vector<SlopeRow> slope_table(long g, long n_min, long n_max,
                                  const EnumerationLimits& limits) {
  std::vector<SlopeRow> rows;
  for (long n = n_min; n <= n_max; ++n) {
    SlopeRow row;
    row.n = n;
    row.witnesses = n >= 2 ? enumerate_params(g, n, limits) : std::vector<SecantParams>{};
    row.has_divisor = !row.witnesses.empty();
    row.slope_new = make_rational(Integer(g), Integer(n));
    row.slope_classical = g / n;  // floor for positive integers
    row.strict_improvement = row.has_divisor && g % n != 0;
    if (n == g - 1 && !row.has_divisor)
      row.note = "excluded: n = g-1 outside theorem hypotheses";
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace secdiv
