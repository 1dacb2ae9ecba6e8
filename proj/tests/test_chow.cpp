#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "secdiv/chern.hpp"
#include "secdiv/counts.hpp"
#include "secdiv/errors.hpp"
#include "secdiv/fulton_pragacz.hpp"
#include "secdiv/ring2.hpp"
#include "secdiv/ring3.hpp"

using namespace secdiv;

namespace {

RingElement3 gen(long g, unsigned mask) { return RingElement3::generator(g, mask); }

}  // namespace

TEST_CASE("two-factor relations") {
  const long g = 5;
  const RingElement2 eta{ThetaPoly(g), ThetaPoly::constant(g, 1), ThetaPoly(g)};
  const RingElement2 gamma{ThetaPoly(g), ThetaPoly(g), ThetaPoly::constant(g, 1)};

  CHECK((eta * eta).is_zero());
  CHECK((eta * gamma).is_zero());
  // gamma^2 = -2 eta theta
  RingElement2 expected(g);
  expected.b[1] = -2;
  CHECK(gamma * gamma == expected);
  CHECK((gamma * gamma * gamma).is_zero());
}

TEST_CASE("degree functional") {
  const long g = 4;
  RingElement2 x(g);
  x.b[g] = make_rational(Integer(1), Integer(3));
  CHECK(degree_integral(x) == 8);  // 4! / 3
  RingElement2 unit_only = RingElement2::unit(g);
  CHECK(degree_integral(unit_only) == 0);
  RingElement2 gamma_top(g);
  gamma_top.c[g] = 7;
  CHECK(degree_integral(gamma_top) == 0);
}

TEST_CASE("three-factor relations") {
  const long g = 3;
  CHECK((gen(g, mono::e1) * gen(g, mono::e1)).is_zero());
  CHECK((gen(g, mono::e1) * gen(g, mono::g12)).is_zero());
  CHECK((gen(g, mono::e2) * gen(g, mono::g12)).is_zero());
  CHECK((gen(g, mono::e1) * gen(g, mono::g13)).is_zero());
  CHECK((gen(g, mono::e2) * gen(g, mono::g23)).is_zero());

  // g12^2 = -2g eta1 eta2
  CHECK(gen(g, mono::g12) * gen(g, mono::g12) ==
        gen(g, mono::e1 | mono::e2) * Rational(-2 * g));
  // g13^2 = -2 eta1 theta
  CHECK(gen(g, mono::g13) * gen(g, mono::g13) ==
        gen(g, mono::e1) * RingElement3::theta(g) * Rational(-2));
  // g12 * g23 = eta2 g13 and g12 * g13 = eta1 g23
  CHECK(gen(g, mono::g12) * gen(g, mono::g23) == gen(g, mono::e2 | mono::g13));
  CHECK(gen(g, mono::g12) * gen(g, mono::g13) == gen(g, mono::e1 | mono::g23));

  // The triple product is forced to -2 eta1 eta2 theta.
  CHECK(gen(g, mono::g12) * gen(g, mono::g13) * gen(g, mono::g23) ==
        gen(g, mono::e1 | mono::e2) * RingElement3::theta(g) * Rational(-2));

  // eta-adjacent g13*g23 products reduce to zero...
  CHECK((gen(g, mono::e2 | mono::g13) * gen(g, mono::g23)).is_zero());
  CHECK((gen(g, mono::g13) * gen(g, mono::e1 | mono::g23)).is_zero());
  // ...while the bare product is unsupported and fails loudly.
  CHECK_THROWS_AS(gen(g, mono::g13) * gen(g, mono::g23), UnreducibleMonomialError);
}

TEST_CASE("exp_neg basics") {
  const long g = 4;
  CHECK(exp_neg(RingElement3(g)) == RingElement3::unit(g));
  // Square-zero generator: e^{-eta1} = 1 - eta1.
  CHECK(exp_neg(gen(g, mono::e1)) == RingElement3::unit(g) - gen(g, mono::e1));
  // Non-nilpotent input is rejected.
  CHECK_THROWS_AS(exp_neg(RingElement3::unit(g)), ValidationError);
}

TEST_CASE("exp_neg against a hand expansion") {
  // x = delta*eta1 + delta*g12 + (m+n)*eta2 with delta = 1, m+n = 3, g = 2:
  // x^2 = (2*delta*(m+n) - 2*g*delta^2) eta1 eta2 = 2 eta1 eta2 and x^3 = 0,
  // so e^{-x} = 1 - x + eta1 eta2.
  const long g = 2;
  const RingElement3 x =
      gen(g, mono::e1) + gen(g, mono::g12) + gen(g, mono::e2) * Rational(3);
  const RingElement3 expected = RingElement3::unit(g) - gen(g, mono::e1) -
                                gen(g, mono::g12) - gen(g, mono::e2) * Rational(3) +
                                gen(g, mono::e1 | mono::e2);
  CHECK(exp_neg(x) == expected);
  CHECK((x * x * x).is_zero());
}

TEST_CASE("sheaf character") {
  // delta = 0 collapses the divisor factor to (m+n) eta2.
  const ChowParams p0{3, 4, default_twist(3, 4), 2, 0};
  const long g = p0.g;
  const RingElement3 ch_line = RingElement3::unit(g) +
                               gen(g, mono::e2) * Rational(p0.d + p0.m) +
                               gen(g, mono::g23) -
                               gen(g, mono::e2) * RingElement3::theta(g);
  CHECK(sheaf_ch_M1(p0) == ch_line * (gen(g, mono::e2) * Rational(p0.m + p0.n)));

  // The unit coefficient always vanishes.
  for (long delta = 0; delta <= 3; ++delta) {
    const ChowParams p{4, 3, default_twist(4, 3), 3, delta};
    CHECK(sheaf_ch_M1(p).constant_term() == 0);
  }

  CHECK_THROWS_AS(sheaf_ch_M1(ChowParams{5, 2, 0, 2, 1}), ValidationError);
}

TEST_CASE("pushforward of bare classes") {
  const long g = 4;
  CHECK(grr_pushforward(gen(g, mono::e2), g) == RingElement2::unit(g));
  CHECK(grr_pushforward(gen(g, mono::g23), g).is_zero());
  // eta1*eta2 integrates to eta; eta2*g13 to gamma.
  RingElement2 eta(g);
  eta.b[0] = 1;
  CHECK(grr_pushforward(gen(g, mono::e1 | mono::e2), g) == eta);
  RingElement2 gamma(g);
  gamma.c[0] = 1;
  CHECK(grr_pushforward(gen(g, mono::e2 | mono::g13), g) == gamma);
  // eta1 alone carries no point class on the fiber factor: the Todd term
  // (1-g) eta2 promotes it to eta1 eta2.
  RingElement2 todd_eta(g);
  todd_eta.b[0] = 1 - g;
  CHECK(grr_pushforward(gen(g, mono::e1), g) == todd_eta);
}

TEST_CASE("pushforward matches the closed character") {
  for (const ChowParams p : {ChowParams{2, 4, 2, 2, 1}, ChowParams{3, 3, 2, 4, 2},
                             ChowParams{6, 5, default_twist(6, 5), 4, 3}}) {
    const RingElement2 pushed = grr_pushforward(sheaf_ch_M1(p), p.g);
    RingElement2 expected(p.g);
    expected.a[0] = p.m + p.n;
    expected.b[0] = Rational(p.g) * p.delta * p.delta +
                    Rational(p.delta) * (p.d - p.g + 1 - p.n);
    expected.b[1] = -Rational(p.delta);
    expected.c[0] = p.delta;
    CHECK(pushed == expected);
  }
}

TEST_CASE("Chern classes via Newton identities") {
  const ChowParams p{5, 4, default_twist(5, 4), 3, 2};
  const ChernData cls = chern_classes_from_ch(ch_M1(p));
  const RingElement2 total = total_from_classes(cls);
  RingElement2 expected = RingElement2::unit(p.g);
  expected.b[0] = Rational(p.g) * p.delta * p.delta +
                  Rational(p.delta) * (p.d - p.g + 1 - p.n);
  expected.b[1] = Rational(p.delta) - Rational(p.delta) * p.delta;
  expected.c[0] = p.delta;
  CHECK(total == expected);

  // Rank-only character gives the trivial total class.
  ChernData rank_only;
  rank_only.kind = ChernKind::character;
  rank_only.rank = 7;
  rank_only.comp.assign(4, RingElement2(p.g));
  CHECK(total_from_classes(chern_classes_from_ch(rank_only)) == RingElement2::unit(p.g));

  // Line-bundle-like character 1 + theta has c_1 = theta.
  ChernData line;
  line.kind = ChernKind::character;
  line.rank = 1;
  line.comp.assign(3, RingElement2(p.g));
  line.comp[1].a[1] = 1;
  const ChernData line_cls = chern_classes_from_ch(line);
  CHECK(line_cls.comp[1] == line.comp[1]);

  // Round trip in both directions.
  const ChernData ch = ch_M1(p);
  const ChernData back = ch_from_chern_classes(chern_classes_from_ch(ch));
  CHECK(back.rank == ch.rank);
  CHECK(back.comp == ch.comp);
}

TEST_CASE("difference Chern classes") {
  const ChowParams p{6, 6, default_twist(6, 6), 3, 2};
  CHECK(difference_chern(0, 0, p) == RingElement2::unit(p.g));
  CHECK(difference_chern(-1, 0, p).is_zero());

  const Rational big_k =
      Rational(p.g) * p.delta * p.delta + Rational(p.delta) * (p.d - p.g + 1 - p.n);

  // j = 1: eta*K + delta*gamma + theta.
  RingElement2 c1(p.g);
  c1.a[1] = 1;
  c1.b[0] = big_k;
  c1.c[0] = p.delta;
  CHECK(difference_chern(1, 1, p) == c1);

  // j = 2: theta^2/2 + eta*theta*(K + delta - delta^2) + delta*gamma*theta.
  RingElement2 c2(p.g);
  c2.a[2] = make_rational(Integer(1), Integer(2));
  c2.b[1] = big_k + Rational(p.delta) - Rational(p.delta) * p.delta;
  c2.c[1] = p.delta;
  CHECK(difference_chern(2, 1, p) == c2);
}

TEST_CASE("determinantal count at the fixtures") {
  const SecantParams p3 = validate(3, 1, 3, 1, 3);
  CHECK(fulton_pragacz_T(p3, 3) == 24);
  CHECK(fulton_pragacz_T(p3, 1) == 2);
  CHECK(fulton_pragacz_T(p3, 0) == 0);

  const SecantParams p6 = validate(6, 2, 6, 2, 3);
  CHECK(fulton_pragacz_T(p6, 1) == 20);
  CHECK(fulton_pragacz_T(p6, 3) == 240);
  CHECK(fulton_pragacz_T(p6, 0) == 0);

  CHECK_THROWS_AS(fulton_pragacz_T(p6, 5), ValidationError);
}

TEST_CASE("determinantal count is twist independent") {
  const SecantParams p = validate(4, 1, 3, 1, 2);
  const long m0 = default_twist(4, 3);
  const Rational base = fulton_pragacz_T(p, 1, m0);
  for (long m = m0 + 1; m <= m0 + 4; ++m) CHECK(fulton_pragacz_T(p, 1, m) == base);
}

TEST_CASE("determinantal count equals the closed form across deltas") {
  for (const SecantParams& p :
       {validate(3, 1, 3, 1, 3), validate(6, 2, 6, 2, 3), validate(4, 1, 3, 1, 2),
        validate(2, 1, 2, 1, 2)}) {
    for (long delta = 0; delta <= p.n; ++delta)
      CHECK(fulton_pragacz_T(p, delta) == pointed_secant_count(p, delta).value);
  }
}
