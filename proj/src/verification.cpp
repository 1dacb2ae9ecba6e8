#include "secdiv/verification.hpp"

#include <optional>
#include <random>
#include <sstream>

#include "secdiv/chern.hpp"
#include "secdiv/counts.hpp"
#include "secdiv/errors.hpp"
#include "secdiv/fulton_pragacz.hpp"
#include "secdiv/moduli.hpp"
#include "secdiv/symprod.hpp"

namespace secdiv {

namespace {

SuiteResult pass(std::string name, long cases) {
  return SuiteResult{std::move(name), true, cases, ""};
}

SuiteResult fail(std::string name, long cases, std::string counterexample) {
  return SuiteResult{std::move(name), false, cases, std::move(counterexample)};
}

// The printed pushforward character: (m+n) + eta*(g d^2 + d(d-g+1-n)) +
// delta*gamma - delta*eta*theta, with K = g*delta^2 + delta*(d-g+1-n).
RingElement2 printed_ch_M1(const ChowParams& p) {
  RingElement2 out(p.g);
  const Rational big_k =
      Rational(p.g) * p.delta * p.delta + Rational(p.delta) * (p.d - p.g + 1 - p.n);
  out.a[0] = p.m + p.n;
  out.b[0] = big_k;
  if (p.g >= 1) out.b[1] = -Rational(p.delta);
  out.c[0] = p.delta;
  return out;
}

// The printed total Chern class 1 + eta*K + delta*gamma + (delta-delta^2)*eta*theta.
RingElement2 printed_c_M1(const ChowParams& p) {
  RingElement2 out(p.g);
  const Rational big_k =
      Rational(p.g) * p.delta * p.delta + Rational(p.delta) * (p.d - p.g + 1 - p.n);
  out.a[0] = 1;
  out.b[0] = big_k;
  if (p.g >= 1) out.b[1] = Rational(p.delta) - Rational(p.delta) * p.delta;
  out.c[0] = p.delta;
  return out;
}

// The printed degree-j difference class theta^j/j! + eta*theta^{j-1}(K/(j-1)!
// + (delta-delta^2)/(j-2)!) + delta/(j-1)! * gamma*theta^{j-1}.
RingElement2 printed_c1_j(long j, const ChowParams& p) {
  RingElement2 out(p.g);
  const Rational big_k =
      Rational(p.g) * p.delta * p.delta + Rational(p.delta) * (p.d - p.g + 1 - p.n);
  const Rational quad = Rational(p.delta) - Rational(p.delta) * p.delta;
  out.a = ThetaPoly::theta_power_over_factorial(p.g, j);
  if (j >= 1 && j - 1 <= p.g) {
    out.b[j - 1] = big_k * inv_factorial(j - 1) + quad * inv_factorial(j - 2);
    out.c[j - 1] = Rational(p.delta) * inv_factorial(j - 1);
  }
  return out;
}

SecantParams fixture_g3() { return validate(3, 1, 3, 1, 3); }
SecantParams fixture_g6() { return validate(6, 2, 6, 2, 3); }
SecantParams fixture_g4() { return validate(4, 1, 3, 1, 2); }

std::vector<SecantParams> fixtures() { return {fixture_g3(), fixture_g6(), fixture_g4()}; }

}  // namespace

std::vector<SecantParams> desk_enumeration(long g_min, long g_max, long r_max,
                                           long n_max, bool require_nonempty) {
  std::vector<SecantParams> out;
  for (long g = g_min; g <= g_max; ++g)
    for (long r = 1; r <= r_max; ++r)
      for (long t = 1; t <= r; ++t)
        for (long n = t + 1; n <= n_max; ++n) {
          const auto d = solve_degree(g, r, t, n);
          if (!d || *d < 2 || *d > 4 * g) continue;
          try {
            SecantParams p = validate(g, r, *d, t, n);
            if (require_nonempty && nonempty_conditions(p).empty()) continue;
            out.push_back(std::move(p));
          } catch (const ValidationError&) {
          }
        }
  return out;
}

SuiteResult suite_product_vs_sum(VerifyLevel level) {
  const std::string name = "product-vs-sum count equivalence";
  const auto tuples = level == VerifyLevel::quick
                          ? fixtures()
                          : desk_enumeration(2, 12, 4, 10, false);
  long cases = 0;
  for (const auto& p : tuples) {
    const Rational prod = secant_point_count(p).value;
    const Rational sum = castelnuovo_count(p.g, p.r, p.d, p.a).value;
    ++cases;
    if (prod != sum)
      return fail(name, cases,
                  p.str() + ": product " + rational_str(prod) + " vs sum " +
                      rational_str(sum));
  }
  return pass(name, cases);
}

SuiteResult suite_oracle_T(VerifyLevel level) {
  const std::string name = "determinantal oracle agrees with T(delta)";
  const auto tuples = level == VerifyLevel::quick
                          ? fixtures()
                          : desk_enumeration(2, 8, 3, 10, false);
  long cases = 0;
  for (const auto& p : tuples)
    for (long delta = 0; delta <= p.n; ++delta) {
      const Rational oracle = fulton_pragacz_T(p, delta);
      const Rational closed = pointed_secant_count(p, delta).value;
      ++cases;
      if (oracle != closed)
        return fail(name, cases,
                    p.str() + " delta=" + std::to_string(delta) + ": oracle " +
                        rational_str(oracle) + " vs closed form " + rational_str(closed));
    }
  return pass(name, cases);
}

SuiteResult suite_quadratic_interpolation(VerifyLevel level) {
  const std::string name = "T(delta) samples lie on a quadratic";
  const auto tuples = level == VerifyLevel::quick
                          ? fixtures()
                          : desk_enumeration(2, 8, 3, 8, false);
  long cases = 0;
  for (const auto& p : tuples) {
    std::vector<Rational> samples;
    for (long delta = 0; delta <= p.n; ++delta)
      samples.push_back(fulton_pragacz_T(p, delta));
    // Quadratic through delta = 0, 1, 2, evaluated at the rest.
    const Rational c0 = samples[0];
    const Rational lin = samples[1] - samples[0];
    const Rational half_quad =
        (samples[2] - 2 * samples[1] + samples[0]) / 2;
    for (long delta = 3; delta <= p.n; ++delta) {
      const Rational predicted =
          c0 + lin * delta + half_quad * delta * (delta - 1);
      ++cases;
      if (predicted != samples[static_cast<std::size_t>(delta)])
        return fail(name, cases,
                    p.str() + " delta=" + std::to_string(delta) +
                        ": quadratic fit predicts " + rational_str(predicted) +
                        ", oracle gives " +
                        rational_str(samples[static_cast<std::size_t>(delta)]));
    }
    ++cases;
  }
  return pass(name, cases);
}

namespace {

std::vector<ChowParams> random_chow_params(unsigned seed, int count, long g_max) {
  std::mt19937 rng(seed);
  std::vector<ChowParams> out;
  while (static_cast<int>(out.size()) < count) {
    ChowParams p;
    p.g = std::uniform_int_distribution<long>(2, g_max)(rng);
    p.d = std::uniform_int_distribution<long>(2, 2 * p.g + 4)(rng);
    p.m = default_twist(p.g, p.d) + std::uniform_int_distribution<long>(0, 3)(rng);
    p.n = std::uniform_int_distribution<long>(2, 8)(rng);
    p.delta = std::uniform_int_distribution<long>(0, p.n)(rng);
    out.push_back(p);
  }
  return out;
}

}  // namespace

SuiteResult suite_grr_pushforward(VerifyLevel level, unsigned seed) {
  const std::string name = "GRR pushforward reproduces printed ch(M1)";
  std::vector<ChowParams> params;
  for (long delta : {0L, 1L, 2L, 5L})
    params.push_back(ChowParams{4, 5, default_twist(4, 5), 5, delta});
  const int random_count = level == VerifyLevel::quick ? 5 : 20;
  for (const auto& p : random_chow_params(seed, random_count, 10)) params.push_back(p);

  long cases = 0;
  for (const auto& p : params) {
    const RingElement2 pushed = grr_pushforward(sheaf_ch_M1(p), p.g);
    ++cases;
    if (!(pushed == printed_ch_M1(p))) {
      std::ostringstream msg;
      msg << "(g=" << p.g << ", d=" << p.d << ", m=" << p.m << ", n=" << p.n
          << ", delta=" << p.delta << "): pushforward " << pushed.str()
          << " vs printed " << printed_ch_M1(p).str();
      return fail(name, cases, msg.str());
    }
  }
  return pass(name, cases);
}

SuiteResult suite_chern_class_pipeline(VerifyLevel level, unsigned seed) {
  const std::string name = "Newton identities reproduce printed c(M1) and c1_j";
  std::vector<ChowParams> params;
  for (long delta : {0L, 1L, 2L, 4L})
    params.push_back(ChowParams{5, 4, default_twist(5, 4), 4, delta});
  const int random_count = level == VerifyLevel::quick ? 5 : 20;
  for (const auto& p : random_chow_params(seed + 1, random_count, 10)) params.push_back(p);

  long cases = 0;
  for (const auto& p : params) {
    const ChernData ch = ch_M1(p);
    const ChernData cls = chern_classes_from_ch(ch);
    const RingElement2 total = total_from_classes(cls);
    ++cases;
    if (!(total == printed_c_M1(p)))
      return fail(name, cases, "total Chern class mismatch at g=" + std::to_string(p.g) +
                                   " delta=" + std::to_string(p.delta));

    // Round-trip character -> classes -> character.
    const ChernData back = ch_from_chern_classes(cls);
    if (!(back.rank == ch.rank) || back.comp != ch.comp)
      return fail(name, cases, "ch <-> c round trip failed at g=" + std::to_string(p.g));

    for (long j = 0; j <= p.g + 1; ++j) {
      if (!(difference_chern(j, 1, p) == printed_c1_j(j, p)))
        return fail(name, cases,
                    "difference class c1_" + std::to_string(j) + " mismatch at g=" +
                        std::to_string(p.g) + " delta=" + std::to_string(p.delta));
      RingElement2 c0(p.g);
      c0.a = ThetaPoly::theta_power_over_factorial(p.g, j);
      if (!(difference_chern(j, 0, p) == c0))
        return fail(name, cases, "difference class c0_" + std::to_string(j) + " mismatch");
    }
  }
  return pass(name, cases);
}

namespace {

RingElement3 random_element3(std::mt19937& rng, long genus, bool allow_g13) {
  // Bare g13 and bare g23 never meet in one trial, keeping every product
  // inside the supported algebra.
  static const std::vector<unsigned> with_g13 = {
      0u, mono::e1, mono::e2, mono::e1 | mono::e2, mono::g12, mono::g13,
      mono::e2 | mono::g13};
  static const std::vector<unsigned> with_g23 = {
      0u, mono::e1, mono::e2, mono::e1 | mono::e2, mono::g12, mono::g23,
      mono::e1 | mono::g23};
  const auto& masks = allow_g13 ? with_g13 : with_g23;
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<std::size_t> pick(0, masks.size() - 1);
  std::uniform_int_distribution<long> theta_pow(0, genus);
  RingElement3 out(genus);
  for (int term = 0; term < 4; ++term) {
    ThetaPoly poly(genus);
    poly[theta_pow(rng)] = coeff(rng);
    out += RingElement3::monomial(genus, masks[pick(rng)], poly);
  }
  return out;
}

RingElement2 random_element2(std::mt19937& rng, long genus) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<long> theta_pow(0, genus);
  RingElement2 out(genus);
  for (int term = 0; term < 2; ++term) {
    out.a[theta_pow(rng)] += coeff(rng);
    out.b[theta_pow(rng)] += coeff(rng);
    out.c[theta_pow(rng)] += coeff(rng);
  }
  return out;
}

}  // namespace

SuiteResult suite_ring_axioms(VerifyLevel level, unsigned seed) {
  const std::string name = "ring axioms and rewrite confluence";
  std::mt19937 rng(seed + 2);
  const int trials = level == VerifyLevel::quick ? 40 : 400;
  long cases = 0;

  // Exhaustive products of normal-form monomials commute; the unsupported
  // pair throws symmetrically.
  static const std::vector<unsigned> normal_masks = {
      0u,        mono::e1,  mono::e2,  mono::e1 | mono::e2, mono::g12,
      mono::g13, mono::g23, mono::e2 | mono::g13, mono::e1 | mono::g23};
  const long genus = 4;
  for (unsigned m1 : normal_masks)
    for (unsigned m2 : normal_masks) {
      ++cases;
      bool threw_left = false, threw_right = false;
      MonomialProduct left{Rational(0), 0, 0}, right{Rational(0), 0, 0};
      try {
        left = reduce_monomial_product(m1, m2, genus);
      } catch (const UnreducibleMonomialError&) {
        threw_left = true;
      }
      try {
        right = reduce_monomial_product(m2, m1, genus);
      } catch (const UnreducibleMonomialError&) {
        threw_right = true;
      }
      if (threw_left != threw_right ||
          (!threw_left && (left.coeff != right.coeff || left.mask != right.mask ||
                           left.theta_shift != right.theta_shift)))
        return fail(name, cases,
                    "monomial product asymmetric: " + mono::str(m1) + " * " + mono::str(m2));
    }

  // Exhaustive associativity over normal-form monomial triples; orders that
  // pass through the unsupported bare g13*g23 product are skipped once the
  // throw itself is confirmed.
  for (unsigned m1 : normal_masks)
    for (unsigned m2 : normal_masks)
      for (unsigned m3 : normal_masks) {
        const RingElement3 x = RingElement3::generator(genus, m1);
        const RingElement3 y = RingElement3::generator(genus, m2);
        const RingElement3 z = RingElement3::generator(genus, m3);
        RingElement3 left(genus), right(genus);
        bool left_defined = true, right_defined = true;
        try {
          left = (x * y) * z;
        } catch (const UnreducibleMonomialError&) {
          left_defined = false;
        }
        try {
          right = x * (y * z);
        } catch (const UnreducibleMonomialError&) {
          right_defined = false;
        }
        ++cases;
        if (left_defined && right_defined && !(left == right))
          return fail(name, cases,
                      "monomial associativity: " + mono::str(m1) + ", " + mono::str(m2) +
                          ", " + mono::str(m3));
      }

  for (int trial = 0; trial < trials; ++trial) {
    const bool allow_g13 = trial % 2 == 0;
    const RingElement3 x = random_element3(rng, genus, allow_g13);
    const RingElement3 y = random_element3(rng, genus, allow_g13);
    const RingElement3 z = random_element3(rng, genus, allow_g13);
    ++cases;
    if (!(x * y == y * x)) return fail(name, cases, "three-factor commutativity: " + x.str());
    if (!((x * y) * z == x * (y * z)))
      return fail(name, cases, "three-factor associativity: " + x.str());
    if (!(x * (y + z) == x * y + x * z))
      return fail(name, cases, "three-factor distributivity: " + x.str());

    const RingElement2 u = random_element2(rng, genus);
    const RingElement2 v = random_element2(rng, genus);
    const RingElement2 w = random_element2(rng, genus);
    if (!(u * v == v * u)) return fail(name, cases, "two-factor commutativity: " + u.str());
    if (!((u * v) * w == u * (v * w)))
      return fail(name, cases, "two-factor associativity: " + u.str());
    if (!(u * (v + w) == u * v + u * w))
      return fail(name, cases, "two-factor distributivity: " + u.str());
  }

  // The unsupported product fails loudly.
  ++cases;
  try {
    reduce_monomial_product(mono::g13, mono::g23, genus);
    return fail(name, cases, "g13*g23 did not throw");
  } catch (const UnreducibleMonomialError&) {
  }
  return pass(name, cases);
}

SuiteResult suite_vandermonde(VerifyLevel level, unsigned seed) {
  const std::string name = "factorial Vandermonde closed form vs determinant";
  long cases = 0;

  if (vandermonde_delta({0, 1, 2}) != 1) return fail(name, 1, "delta(0,1,2) != 1");
  ++cases;
  if (vandermonde_delta({1, 2, 4}) != make_rational(Integer(1), Integer(8)))
    return fail(name, 2, "delta(1,2,4) != 1/8");
  ++cases;
  if (vandermonde_delta({2, 2, 3}) != 0) return fail(name, 3, "delta(2,2,3) != 0");
  ++cases;

  std::mt19937 rng(seed + 3);
  const int trials = level == VerifyLevel::quick ? 50 : 300;
  for (int trial = 0; trial < trials; ++trial) {
    const long len = std::uniform_int_distribution<long>(2, 6)(rng);
    std::vector<long> b;
    long next = std::uniform_int_distribution<long>(-2, 3)(rng);
    for (long i = 0; i < len; ++i) {
      b.push_back(next);
      next += std::uniform_int_distribution<long>(1, 5)(rng);
      if (next > 30) next = 30 + static_cast<long>(i);  // keep entries <= ~30
    }
    ++cases;
    try {
      vandermonde_delta(b);  // throws on internal mismatch
    } catch (const ConsistencyError& e) {
      return fail(name, cases, e.what());
    }
  }
  return pass(name, cases);
}

SuiteResult suite_mu_nu_sigma(VerifyLevel level) {
  const std::string name = "test-curve mu equals nu * sigma";
  const auto tuples = level == VerifyLevel::quick
                          ? std::vector<SecantParams>{fixture_g3(), fixture_g6()}
                          : desk_enumeration(3, 12, 4, 10, false);
  long cases = 0;
  for (const auto& p : tuples) {
    ++cases;
    try {
      const PointedBNData data = mu_nu(p);  // construction asserts mu = nu*sigma
      if (data.count > 0 && !(data.nu > 0))
        return fail(name, cases, p.str() + ": nu not positive");
    } catch (const ConsistencyError& e) {
      return fail(name, cases, e.what());
    }
  }
  return pass(name, cases);
}

SuiteResult suite_weierstrass(VerifyLevel level) {
  const std::string name = "Weierstrass specializations";
  long cases = 0;
  const long count_max = level == VerifyLevel::quick ? 8 : 20;
  for (long g = 2; g <= count_max; ++g) {
    VanishingSequence a;
    a.entries = {0, g};
    const Rational count = castelnuovo_count(g, 1, g, a).value;
    ++cases;
    if (count != Rational(g) * g * g - g)
      return fail(name, cases,
                  "g=" + std::to_string(g) + ": count " + rational_str(count) +
                      " != g^3 - g");
  }
  const long class_max = level == VerifyLevel::quick ? 6 : 15;
  for (long g = 3; g <= class_max; ++g) {
    const SecantParams p = validate(g, 1, g, 1, g);
    ++cases;
    if (!(pointed_bn_class(p) == w_class(g)))
      return fail(name, cases,
                  "g=" + std::to_string(g) + ": pointed class is not the Weierstrass class");
  }
  return pass(name, cases);
}

SuiteResult suite_pointed_moduli_identities(VerifyLevel level) {
  const std::string name = "n-pointed class coefficient identities";
  const auto tuples = level == VerifyLevel::quick
                          ? fixtures()
                          : desk_enumeration(2, 12, 4, 10, true);
  long cases = 0;
  for (const auto& p : tuples) {
    if (nonempty_conditions(p).empty()) continue;
    const SecantClassCoefficients k = secant_class_coefficients(p);
    const long g = p.g, n = p.n;

    // c_{0:j} recursion j*c_psi + (j-2)*c_{0:j} - j*c_{0:j-1} = 0.
    for (long j = 3; j <= n; ++j) {
      ++cases;
      if (Rational(j) * k.c_psi + Rational(j - 2) * k.c_0j.at(j) -
              Rational(j) * k.c_0j.at(j - 1) !=
          0)
        return fail(name, cases, p.str() + ": c_{0:" + std::to_string(j) + "} recursion");
    }

    // One-moving-point test curve: nu((2g+2n-4)c_psi - (n-1)c_{0:2}) = T(1).
    ++cases;
    const Rational t1 = pointed_secant_count(p, 1).value;
    if (k.nu * (Rational(2 * g + 2 * n - 4) * k.c_psi - Rational(n - 1) * k.c_0j.at(2)) !=
        t1)
      return fail(name, cases, p.str() + ": T(1) test-curve identity");

    // Two-moving-point system with h_{0:{x,y}} = C(g+1,2) solves back to c_psi.
    ++cases;
    const Rational tn1 = pointed_secant_count(p, n - 1).value;
    const Rational b = binomial(g + 1, 2);
    const Rational rhs1 = t1 / k.nu + b;
    const Rational rhs2 = tn1 / k.nu + b;
    const Rational det = Rational(2 * g - 1) * (2 * g - 1) - 1;
    const Rational h_x = (Rational(2 * g - 1) * rhs1 - rhs2) / det;
    if (h_x != k.c_psi)
      return fail(name, cases,
                  p.str() + ": two-point system solves h_x = " + rational_str(h_x) +
                      " != c_psi = " + rational_str(k.c_psi));

    // lambda, delta_irr, delta_{i:0} coefficients match the 1-pointed class
    // (delta_{i:0} against delta_{g-i}).
    const PicClassM_g1 collided = pointed_bn_class(p);
    ++cases;
    if (k.nu * k.c_lambda != collided.lambda || -k.nu * k.c_irr != collided.delta_irr)
      return fail(name, cases, p.str() + ": lambda/delta_irr coefficients");
    for (long i = 1; i <= g - 1; ++i) {
      ++cases;
      if (-k.nu * k.c_i0.at(i) != collided.delta(g - i))
        return fail(name, cases,
                    p.str() + ": delta_{" + std::to_string(i) + ":0} vs delta_{g-i}");
    }
  }
  return pass(name, cases);
}

SuiteResult suite_symmetric_product_routes(VerifyLevel level) {
  const std::string name = "symmetric-product class route equivalence";
  const auto tuples = level == VerifyLevel::quick
                          ? fixtures()
                          : desk_enumeration(2, 12, 4, 10, true);
  long cases = 0;
  for (const auto& p : tuples) {
    if (nonempty_conditions(p).empty()) continue;
    const NSClassCn direct = secant_class_cn(p);
    const NSClassCn pulled = secant_class_cn_via_pullback(p);
    ++cases;
    if (!(direct == pulled))
      return fail(name, cases,
                  p.str() + ": direct (" + rational_str(direct.theta_coeff) + ", " +
                      rational_str(direct.x_coeff) + ") vs pullback (" +
                      rational_str(pulled.theta_coeff) + ", " +
                      rational_str(pulled.x_coeff) + ")");
    ++cases;
    if (Rational(p.n) * direct.x_coeff + Rational(p.g) * direct.theta_coeff != 0)
      return fail(name, cases, p.str() + ": class off the theta - (g/n)x ray");
    ++cases;
    if (!(direct.theta_coeff > 0) || !(direct.x_coeff < 0))
      return fail(name, cases, p.str() + ": class outside the fourth quadrant");
  }

  const long g_max = level == VerifyLevel::quick ? 8 : 20;
  for (long g = 2; g <= g_max; ++g)
    for (long d = (g + 3) / 2; d <= g; ++d) {
      const long n = 2 * d - g;
      if (n < 2) continue;
      const SecantParams p = validate(g, 1, d, 1, n);
      ++cases;
      if (!(secant_class_cn(p) == r1_class(g, d)))
        return fail(name, cases,
                    "r=1 reduction at g=" + std::to_string(g) + ", d=" + std::to_string(d));
    }
  return pass(name, cases);
}

SuiteResult suite_coverage(VerifyLevel level) {
  const std::string name = "coverage: witnesses for g/2 <= n <= g-2";
  const long g_max = level == VerifyLevel::quick ? 14 : 30;
  long cases = 0;
  for (long g = 4; g <= g_max; ++g)
    for (long n = (g + 1) / 2; n <= g - 2; ++n) {
      ++cases;
      if (enumerate_params(g, n).empty())
        return fail(name, cases,
                    "no witness at g=" + std::to_string(g) + ", n=" + std::to_string(n));
    }
  return pass(name, cases);
}

SuiteResult suite_twist_independence(VerifyLevel level) {
  const std::string name = "determinantal degree independent of the twist";
  const auto tuples = level == VerifyLevel::quick
                          ? fixtures()
                          : desk_enumeration(2, 6, 3, 6, false);
  long cases = 0;
  for (const auto& p : tuples)
    for (long delta : {1L, p.n}) {
      // The h^1-vanishing bound itself and the next four twists.
      const long m0 = 2 * p.g - 1 - p.d;
      const Rational base = fulton_pragacz_T(p, delta, m0);
      for (long m = m0 + 1; m <= m0 + 4; ++m) {
        ++cases;
        if (fulton_pragacz_T(p, delta, m) != base)
          return fail(name, cases,
                      p.str() + " delta=" + std::to_string(delta) + " twist m=" +
                          std::to_string(m));
      }
    }
  return pass(name, cases);
}

SuiteResult suite_residuation(VerifyLevel level) {
  const std::string name = "residuation preserves the codimension condition";
  const auto tuples = level == VerifyLevel::quick
                          ? std::vector<SecantParams>{fixture_g6(), fixture_g3(),
                                                      fixture_g4()}
                          : desk_enumeration(2, 12, 4, 10, false);
  long cases = 0;
  for (const auto& p : tuples) {
    if (p.t != p.r) continue;
    const ResidualTuple q = residual_params(p);
    ++cases;
    if (rho(q.g, q.r, q.d) != (q.n - q.t) * (q.r + 1 - q.t) - 1)
      return fail(name, cases, p.str() + " residuates off the codimension condition");
    ++cases;
    if (q.t < 1 || q.t > q.r || q.n < q.t + 1 || q.g - q.d + q.r < 1)
      return fail(name, cases, p.str() + " residuates outside the parameter ranges");
  }
  return pass(name, cases);
}

SuiteResult suite_count_endpoints(VerifyLevel level) {
  const std::string name = "T endpoints and integrality";
  const auto tuples = level == VerifyLevel::quick
                          ? fixtures()
                          : desk_enumeration(2, 10, 4, 10, false);
  long cases = 0;
  for (const auto& p : tuples) {
    const Rational count = secant_point_count(p).value;
    ++cases;
    if (pointed_secant_count(p, 0).value != 0)
      return fail(name, cases, p.str() + ": T(0) != 0");
    ++cases;
    if (pointed_secant_count(p, p.n).value != count)
      return fail(name, cases, p.str() + ": T(n) != count");
    ++cases;
    if (pointed_secant_count(p, 1).value * p.n * (p.n + 1) != count)
      return fail(name, cases, p.str() + ": T(1) != count/(n(n+1))");
    ++cases;
    if (!is_integer(count)) return fail(name, cases, p.str() + ": non-integral count");
  }
  return pass(name, cases);
}

SuiteResult suite_golden_values(VerifyLevel) {
  const std::string name = "golden fixtures";
  long cases = 0;
  const auto check = [&cases, &name](bool ok, const std::string& what)
      -> std::optional<SuiteResult> {
    ++cases;
    if (!ok) return fail(name, cases, what);
    return std::nullopt;
  };

  VanishingSequence a33;
  a33.entries = {0, 3};
  if (auto r = check(castelnuovo_count(3, 1, 3, a33).value == 24, "n_{3,1,3,(0,3)} != 24"))
    return *r;
  VanishingSequence a66;
  a66.entries = {0, 1, 3};
  if (auto r = check(castelnuovo_count(6, 2, 6, a66).value == 240, "n_{6,2,6,(0,1,3)} != 240"))
    return *r;

  const SecantParams p6 = fixture_g6();
  if (auto r = check(pointed_secant_count(p6, 1).value == 20, "T(1) != 20 at g=6 fixture"))
    return *r;
  const NSClassCn c6 = secant_class_cn(p6);
  if (auto r = check(c6.theta_coeff == 5 && c6.x_coeff == -10,
                     "class at g=6 fixture is not 5*theta - 10x"))
    return *r;

  const SecantParams p4 = fixture_g4();
  const NSClassCn c4 = secant_class_cn(p4);
  if (auto r = check(c4.theta_coeff == 2 && c4.x_coeff == -4,
                     "class at g=4 fixture is not 2*theta - 4x"))
    return *r;

  const SecantParams p3 = fixture_g3();
  const NSClassCn c3 = secant_class_cn(p3);
  if (auto r = check(c3.theta_coeff == 1 && c3.x_coeff == -1,
                     "class at g=3 fixture is not theta - x"))
    return *r;

  return pass(name, cases);
}

std::vector<SuiteResult> run_verification(VerifyLevel level, unsigned seed) {
  return {
      suite_golden_values(level),
      suite_product_vs_sum(level),
      suite_count_endpoints(level),
      suite_vandermonde(level, seed),
      suite_ring_axioms(level, seed),
      suite_grr_pushforward(level, seed),
      suite_chern_class_pipeline(level, seed),
      suite_oracle_T(level),
      suite_quadratic_interpolation(level),
      suite_twist_independence(level),
      suite_mu_nu_sigma(level),
      suite_weierstrass(level),
      suite_pointed_moduli_identities(level),
      suite_symmetric_product_routes(level),
      suite_coverage(level),
      suite_residuation(level),
  };
}

}  // namespace secdiv
