#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "secdiv/arith.hpp"

using namespace secdiv;

TEST_CASE("factorial small values") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(6) == 720);
  CHECK(factorial(10) == 3628800);
  CHECK_THROWS_AS(factorial(-1), std::domain_error);
}

TEST_CASE("factorial beyond the memo bound") {
  // 600! / 599! = 600 exercises the non-memoized path.
  CHECK(factorial(600) == factorial(599) * 600);
}

TEST_CASE("inv_factorial convention") {
  CHECK(inv_factorial(0) == 1);
  CHECK(inv_factorial(4) == make_rational(Integer(1), Integer(24)));
  CHECK(inv_factorial(-3) == 0);
  CHECK(inv_factorial(-1) == 0);
}

TEST_CASE("inv_factorial inverts factorial") {
  for (long k = 0; k <= 40; ++k)
    CHECK(inv_factorial(k) * factorial(k) == 1);
}

TEST_CASE("binomial values and conventions") {
  CHECK(binomial(4, 1) == 4);
  CHECK(binomial(7, 2) == 21);  // (g+1 choose 2) at g = 6
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(0, 0) == 1);
}

TEST_CASE("binomial symmetry") {
  for (long n = 0; n <= 25; ++n)
    for (long k = 0; k <= n; ++k) CHECK(binomial(n, k) == binomial(n, n - k));
}

TEST_CASE("rational field axioms on random triples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a = make_rational(Integer(num(rng)), Integer(den(rng)));
    const Rational b = make_rational(Integer(num(rng)), Integer(den(rng)));
    const Rational c = make_rational(Integer(num(rng)), Integer(den(rng)));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + 0 == a);
    CHECK(a * 1 == a);
    CHECK(a + (-a) == 0);
    if (a != 0) CHECK(a * (1 / a) == 1);
  }
}

TEST_CASE("rationals are canonical") {
  const Rational q = make_rational(Integer(4), Integer(-6));
  CHECK(q.get_num() == -2);
  CHECK(q.get_den() == 3);
  CHECK(rational_str(q) == "-2/3");
  CHECK(rational_str(Rational(240)) == "240");
  CHECK_THROWS_AS(make_rational(Integer(1), Integer(0)), std::domain_error);
  CHECK(is_integer(Rational(7)));
  CHECK(!is_integer(make_rational(Integer(21), Integer(8))));
}
