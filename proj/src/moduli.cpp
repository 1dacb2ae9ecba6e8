#include "secdiv/moduli.hpp"

#include "secdiv/errors.hpp"

namespace secdiv {

PicClassM_g1& PicClassM_g1::operator+=(const PicClassM_g1& o) {
  lambda += o.lambda;
  psi += o.psi;
  delta_irr += o.delta_irr;
  for (std::size_t i = 0; i < delta_i.size(); ++i) delta_i[i] += o.delta_i[i];
  return *this;
}

PicClassM_g1& PicClassM_g1::operator*=(const Rational& q) {
  lambda *= q;
  psi *= q;
  delta_irr *= q;
  for (auto& x : delta_i) x *= q;
  return *this;
}

PicClassM_g1 bn_class(long g) {
  PicClassM_g1 c(g);
  c.lambda = g + 3;
  c.psi = 0;
  c.delta_irr = make_rational(Integer(-(g + 1)), Integer(6));
  for (long i = 1; i <= g - 1; ++i)
    c.delta_i[static_cast<std::size_t>(i - 1)] = -i * (g - i);
  return c;
}

PicClassM_g1 w_class(long g) {
  PicClassM_g1 c(g);
  c.lambda = -1;
  c.psi = binomial(g + 1, 2);
  c.delta_irr = 0;
  for (long i = 1; i <= g - 1; ++i)
    c.delta_i[static_cast<std::size_t>(i - 1)] = -Rational(binomial(g - i + 1, 2));
  return c;
}

Rational sigma_coeff(const SecantParams& p) {
  if (p.g == 2) return Rational(0);
  const long g = p.g, r = p.r, d = p.d, t = p.t, n = p.n, s = p.s;
  const long e = d - g - t + 1;
  const Rational numer =
      Rational(t * e + g + 1) * (n - t) *
          ((n - t) * (3 * t * e - g - 1) + 2 * (g + 1) * (e - t)) -
      Rational(d + 1) * (g + 1) * (g + 1) * (d - 2 * g + 1);
  const Rational denom = Rational(2) * (g - 2) * s * (n + s) * t * (n - t) *
                         (r + 1 - t) * (n + r + 1 - t);
  return numer / denom;
}

namespace {

Rational nu_coefficient(long g, const Rational& count) {
  return count / (Rational(g) * (g * g - 1));
}

}  // namespace

PointedBNData mu_nu(const SecantParams& p) {
  if (p.g == 2)
    throw ValidationError(ValidationKind::range,
                          "mu is undefined at g = 2 (the test-curve formula divides "
                          "by binomial(g-1,2) = 0)");
  const long g = p.g, r = p.r;
  const Rational count = secant_point_count(p).value;

  // Genus-(g-1) counts over the shifted sequences (a_0+1-d0i, ..., a_r+1-dri);
  // collided sequences evaluate to zero.
  Rational shifted_sum(0);
  for (long i = 0; i <= r; ++i) {
    VanishingSequence b = p.a;
    for (std::size_t j = 0; j < b.entries.size(); ++j)
      b.entries[j] += 1 - (static_cast<long>(j) == i ? 1 : 0);
    shifted_sum += castelnuovo_count(g - 1, r, p.d, b).value;
  }

  PointedBNData out;
  out.count = count;
  out.nu = nu_coefficient(g, count);
  out.mu = -count / (Rational(2) * (g * g - 1)) +
           shifted_sum / (Rational(4) * binomial(g - 1, 2));
  out.sigma = sigma_coeff(p);
  if (out.mu != out.nu * out.sigma)
    throw ConsistencyError("test-curve mu " + rational_str(out.mu) +
                           " differs from nu*sigma = " +
                           rational_str(out.nu * out.sigma) + " at " + p.str());
  return out;
}

PicClassM_g1 pointed_bn_class(const SecantParams& p) {
  const Rational count = secant_point_count(p).value;
  const Rational nu = nu_coefficient(p.g, count);
  return nu * (sigma_coeff(p) * bn_class(p.g) + w_class(p.g));
}

SecantClassCoefficients secant_class_coefficients(const SecantParams& p) {
  const long g = p.g, n = p.n;
  SecantClassCoefficients out;
  out.count = secant_point_count(p).value;
  out.nu = nu_coefficient(g, out.count);
  out.sigma = sigma_coeff(p);
  out.c_lambda = out.sigma * (g + 3) - 1;
  out.c_irr = out.sigma * (g + 1) / 6;
  out.c_psi = make_rational(Integer((g + 1) * (g + n)), Integer(2 * n * (n + 1)));
  for (long j = 2; j <= n; ++j)
    out.c_0j[j] = make_rational(Integer(j * (g + 1) * (n * n + j * g * n - j * n - g)),
                                Integer(2 * n * (n * n - 1)));
  for (long i = 1; i <= g - 1; ++i)
    out.c_i0[i] = out.sigma * i * (g - i) + make_rational(Integer(i * (i + 1)), Integer(2));
  return out;
}

PicClassM_gn secant_class_mgn(const SecantParams& p) {
  if (nonempty_conditions(p).empty())
    throw ValidationError(ValidationKind::nonempty,
                          "no nonemptiness condition holds for " + p.str());
  const SecantClassCoefficients k = secant_class_coefficients(p);
  PicClassM_gn cls;
  cls.genus = p.g;
  cls.npoints = p.n;
  cls.lambda = k.nu * k.c_lambda;
  cls.psi_each = k.nu * k.c_psi;
  cls.delta_irr = -k.nu * k.c_irr;
  for (const auto& [j, c] : k.c_0j) cls.delta_0j[j] = -k.nu * c;
  for (const auto& [i, c] : k.c_i0) cls.delta_i0[i] = -k.nu * c;
  cls.unknown_ij = true;
  return cls;
}

}  // namespace secdiv
