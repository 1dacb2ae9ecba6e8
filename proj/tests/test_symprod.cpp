#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "secdiv/errors.hpp"
#include "secdiv/symprod.hpp"

using namespace secdiv;

TEST_CASE("secant classes at the fixtures") {
  const NSClassCn c4 = secant_class_cn(validate(4, 1, 3, 1, 2));
  CHECK(c4.theta_coeff == 2);
  CHECK(c4.x_coeff == -4);

  const NSClassCn c6 = secant_class_cn(validate(6, 2, 6, 2, 3));
  CHECK(c6.theta_coeff == 5);
  CHECK(c6.x_coeff == -10);
  CHECK(c6.slope() == 2);

  const NSClassCn c3 = secant_class_cn(validate(3, 1, 3, 1, 3));
  CHECK(c3.theta_coeff == 1);
  CHECK(c3.x_coeff == -1);
}

TEST_CASE("pullback route agrees") {
  for (const SecantParams& p :
       {validate(6, 2, 6, 2, 3), validate(3, 1, 3, 1, 3), validate(4, 1, 3, 1, 2),
        validate(8, 1, 6, 1, 4)}) {
    CHECK(secant_class_cn(p) == secant_class_cn_via_pullback(p));
  }
}

TEST_CASE("class sits on the theta - (g/n) x ray") {
  for (long g = 3; g <= 10; ++g)
    for (long n = 2; n <= g; ++n)
      for (const auto& p : enumerate_params(g, n)) {
        const NSClassCn cls = secant_class_cn(p);
        CHECK(Rational(p.n) * cls.x_coeff + Rational(p.g) * cls.theta_coeff == 0);
        CHECK(cls.theta_coeff > 0);
        CHECK(cls.x_coeff < 0);
      }
}

TEST_CASE("diagonal class") {
  CHECK(diagonal_class(3, 3) == NSClassCn{3, 3, Rational(-1), Rational(5)});
  CHECK(diagonal_class(6, 3) == NSClassCn{6, 3, Rational(-1), Rational(8)});
  CHECK(diagonal_class(4, 2) == NSClassCn{4, 2, Rational(-1), Rational(5)});
}

TEST_CASE("r = 1 classes") {
  const NSClassCn c43 = r1_class(4, 3);
  CHECK(c43.theta_coeff == 2);
  CHECK(c43.x_coeff == -4);

  const NSClassCn c64 = r1_class(6, 4);
  CHECK(c64.theta_coeff == 5);
  CHECK(c64.x_coeff == -15);

  CHECK_THROWS_AS(r1_class(4, 2), ValidationError);  // n = 0
}

TEST_CASE("r = 1 classes agree with the general formula") {
  for (long g = 2; g <= 14; ++g)
    for (long d = (g + 3) / 2; d <= g; ++d) {
      const long n = 2 * d - g;
      if (n < 2) continue;
      CHECK(secant_class_cn(validate(g, 1, d, 1, n)) == r1_class(g, d));
    }
}

TEST_CASE("slope table") {
  const auto rows = slope_table(10, 5, 8);
  REQUIRE(rows.size() == 4);

  CHECK(rows[0].n == 5);
  CHECK(rows[0].slope_new == 2);
  CHECK(rows[0].slope_classical == 2);
  CHECK(!rows[0].strict_improvement);

  const auto& row7 = rows[2];
  CHECK(row7.n == 7);
  CHECK(row7.slope_new == make_rational(Integer(10), Integer(7)));
  CHECK(row7.slope_classical == 1);
  CHECK(row7.has_divisor);
  CHECK(row7.strict_improvement);

  const auto rows6 = slope_table(6, 3, 3);
  REQUIRE(rows6.size() == 1);
  bool has_witness = false;
  for (const auto& p : rows6[0].witnesses)
    has_witness |= (p.r == 2 && p.t == 2 && p.d == 6);
  CHECK(has_witness);
}

TEST_CASE("excluded n = g-1 rows carry a note") {
  const auto rows = slope_table(10, 9, 9);
  REQUIRE(rows.size() == 1);
  if (!rows[0].has_divisor) CHECK(rows[0].note.find("excluded") != std::string::npos);
}
