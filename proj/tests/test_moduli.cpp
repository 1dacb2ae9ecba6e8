#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "secdiv/errors.hpp"
#include "secdiv/moduli.hpp"

using namespace secdiv;

TEST_CASE("Brill-Noether basis class") {
  const PicClassM_g1 bn3 = bn_class(3);
  CHECK(bn3.lambda == 6);
  CHECK(bn3.psi == 0);
  CHECK(bn3.delta_irr == make_rational(Integer(-2), Integer(3)));
  CHECK(bn3.delta(1) == -2);
  CHECK(bn3.delta(2) == -2);

  CHECK(bn_class(4).delta(2) == -4);
  for (long g = 2; g <= 12; ++g) CHECK(bn_class(g).psi == 0);
}

TEST_CASE("Weierstrass basis class") {
  const PicClassM_g1 w2 = w_class(2);
  CHECK(w2.lambda == -1);
  CHECK(w2.psi == 3);
  CHECK(w2.delta_irr == 0);
  CHECK(w2.delta(1) == -1);

  CHECK(w_class(6).psi == 21);
  for (long g = 2; g <= 12; ++g) CHECK(w_class(g).delta_irr == 0);
}

TEST_CASE("sigma closed form") {
  // Weierstrass case: e = 0, s = 1, numerator vanishes identically.
  CHECK(sigma_coeff(validate(3, 1, 3, 1, 3)) == 0);
  // e = -1: numerator 5*1*(-55) + 1715 = 1440, denominator 640.
  CHECK(sigma_coeff(validate(6, 2, 6, 2, 3)) == make_rational(Integer(9), Integer(4)));
  // The g = 2 branch is explicit.
  CHECK(sigma_coeff(validate(2, 1, 2, 1, 2)) == 0);
}

TEST_CASE("mu and nu via test curves") {
  const PointedBNData d3 = mu_nu(validate(3, 1, 3, 1, 3));
  CHECK(d3.nu == 1);
  CHECK(d3.mu == 0);
  CHECK(d3.count == 24);

  // Shifted genus-5 counts: n_{5,2,6,(0,2,4)} = 240 and n_{5,2,6,(1,2,3)} = 0.
  VanishingSequence b;
  b.entries = {0, 2, 4};
  CHECK(castelnuovo_count(5, 2, 6, b).value == 240);
  b.entries = {1, 2, 3};
  CHECK(castelnuovo_count(5, 2, 6, b).value == 0);

  const PointedBNData d6 = mu_nu(validate(6, 2, 6, 2, 3));
  CHECK(d6.nu == make_rational(Integer(8), Integer(7)));
  CHECK(d6.mu == make_rational(Integer(18), Integer(7)));
  CHECK(d6.mu == d6.nu * d6.sigma);

  CHECK_THROWS_AS(mu_nu(validate(2, 1, 2, 1, 2)), ValidationError);
}

TEST_CASE("pointed Brill-Noether class") {
  // sigma = 0 and nu = 1: the class is the Weierstrass class itself.
  const PicClassM_g1 cls3 = pointed_bn_class(validate(3, 1, 3, 1, 3));
  CHECK(cls3 == w_class(3));
  CHECK(cls3.psi == 6);
  CHECK(cls3.delta(1) == -3);
  CHECK(cls3.delta(2) == -1);

  const PicClassM_g1 cls6 = pointed_bn_class(validate(6, 2, 6, 2, 3));
  CHECK(cls6.lambda == 22);  // (8/7)((9/4)*9 - 1)
  CHECK(cls6.delta_irr == -3);

  // Only the BN part contributes delta_irr.
  const SecantParams p4 = validate(4, 1, 3, 1, 2);
  const Rational nu4 = secant_point_count(p4).value / (Rational(4) * 15);
  CHECK(pointed_bn_class(p4).delta_irr == -nu4 * sigma_coeff(p4) * 5 / 6);
}

TEST_CASE("Weierstrass degeneration across genera") {
  for (long g = 3; g <= 15; ++g)
    CHECK(pointed_bn_class(validate(g, 1, g, 1, g)) == w_class(g));
}

TEST_CASE("n-pointed class coefficients") {
  const SecantParams p = validate(6, 2, 6, 2, 3);
  const SecantClassCoefficients k = secant_class_coefficients(p);
  CHECK(k.c_psi == make_rational(Integer(21), Integer(8)));
  CHECK(k.c_0j.at(2) == make_rational(Integer(77), Integer(8)));
  CHECK(k.c_0j.at(3) == 21);
  CHECK(k.c_lambda == make_rational(Integer(77), Integer(4)));
  CHECK(k.c_i0.at(1) == k.sigma * 5 + 1);

  const PicClassM_gn cls = secant_class_mgn(p);
  CHECK(cls.psi_each == 3);  // (240/210) * (21/8)
  CHECK(cls.lambda == 22);
  CHECK(cls.unknown_ij);
  CHECK(cls.delta_0j.size() == 2);   // j = 2, 3
  CHECK(cls.delta_i0.size() == 5);   // i = 1..5
}

TEST_CASE("g = 2 classes go through the sigma branch") {
  const SecantParams p = validate(2, 1, 2, 1, 2);
  const SecantClassCoefficients k = secant_class_coefficients(p);
  CHECK(k.sigma == 0);
  CHECK(k.c_lambda == -1);
  CHECK(k.c_irr == 0);
  const PicClassM_gn cls = secant_class_mgn(p);
  CHECK(cls.delta_irr == 0);
}

TEST_CASE("c_0j recursion") {
  for (const SecantParams& p :
       {validate(6, 2, 6, 2, 3), validate(3, 1, 3, 1, 3), validate(8, 1, 6, 1, 4)}) {
    const SecantClassCoefficients k = secant_class_coefficients(p);
    for (long j = 3; j <= p.n; ++j)
      CHECK(Rational(j) * k.c_psi + Rational(j - 2) * k.c_0j.at(j) ==
            Rational(j) * k.c_0j.at(j - 1));
  }
}

TEST_CASE("T(1) test-curve identity") {
  for (const SecantParams& p : {validate(6, 2, 6, 2, 3), validate(4, 1, 3, 1, 2)}) {
    const SecantClassCoefficients k = secant_class_coefficients(p);
    CHECK(k.nu * (Rational(2 * p.g + 2 * p.n - 4) * k.c_psi -
                  Rational(p.n - 1) * k.c_0j.at(2)) ==
          pointed_secant_count(p, 1).value);
  }
}
