#include "secdiv/chern.hpp"

#include <algorithm>

#include "secdiv/errors.hpp"

namespace secdiv {

long default_twist(long g, long d) { return std::max(0L, 2 * g - 1 - d); }

RingElement3 sheaf_ch_M1(const ChowParams& p) {
  if (p.m < 2 * p.g - 1 - p.d)
    throw ValidationError(ValidationKind::range,
                          "twist m = " + std::to_string(p.m) +
                              " is below the h^1-vanishing bound " +
                              std::to_string(2 * p.g - 1 - p.d));
  const long g = p.g;
  const auto gen = [g](unsigned mask) { return RingElement3::generator(g, mask); };

  // ch of the normalized Poincare bundle pulled back from factors (2,3).
  RingElement3 ch_line = RingElement3::unit(g) + gen(mono::e2) * Rational(p.d + p.m) +
                         gen(mono::g23) -
                         gen(mono::e2) * RingElement3::theta(g);

  // Divisor class (m+n-delta)*Gamma_p + delta*Diagonal.
  RingElement3 divisor = gen(mono::e1) * Rational(p.delta) +
                         gen(mono::g12) * Rational(p.delta) +
                         gen(mono::e2) * Rational(p.m + p.n);

  return ch_line * (RingElement3::unit(g) - exp_neg(divisor));
}

RingElement2 grr_pushforward(const RingElement3& x, long genus) {
  const RingElement3 todd =
      RingElement3::unit(genus) +
      RingElement3::generator(genus, mono::e2) * Rational(1 - genus);
  const RingElement3 y = x * todd;

  RingElement2 out(genus);
  for (const auto& [mask, coeff] : y.parts()) {
    if (!(mask & mono::e2)) continue;  // no point class on the fiber factor
    const unsigned rest = mask & ~mono::e2;
    if (rest == 0)
      out.a += coeff;
    else if (rest == mono::e1)
      out.b += coeff;
    else if (rest == mono::g13)
      out.c += coeff;
    // gamma12/gamma23 remainders integrate to zero over the fiber
  }
  return out;
}

ChernData ch_M1(const ChowParams& p) {
  const RingElement2 pushed = grr_pushforward(sheaf_ch_M1(p), p.g);
  ChernData ch;
  ch.kind = ChernKind::character;
  ch.rank = pushed.a[0];
  ch.comp.assign(static_cast<std::size_t>(p.g) + 2, RingElement2(p.g));
  for (long k = 1; k <= p.g + 1; ++k)
    ch.comp[static_cast<std::size_t>(k)] = graded_piece(pushed, k);
  return ch;
}

ChernData chern_classes_from_ch(const ChernData& ch) {
  if (ch.kind != ChernKind::character)
    throw ConsistencyError("chern_classes_from_ch expects a Chern character");
  const long kmax = ch.max_degree();
  if (kmax < 0) throw ConsistencyError("empty Chern data");
  const long genus = kmax >= 1 ? ch.comp[1].genus : 0;

  // Power sums p_k = k! * ch_k, then c_k = (1/k) sum_i (-1)^{i-1} c_{k-i} p_i.
  std::vector<RingElement2> p(static_cast<std::size_t>(kmax) + 1, RingElement2(genus));
  for (long k = 1; k <= kmax; ++k)
    p[static_cast<std::size_t>(k)] =
        ch.comp[static_cast<std::size_t>(k)] * Rational(factorial(k));

  ChernData out;
  out.kind = ChernKind::total_class;
  out.rank = ch.rank;
  out.comp.assign(static_cast<std::size_t>(kmax) + 1, RingElement2(genus));
  std::vector<RingElement2> c(static_cast<std::size_t>(kmax) + 1, RingElement2(genus));
  c[0] = RingElement2::unit(genus);
  for (long k = 1; k <= kmax; ++k) {
    RingElement2 acc(genus);
    for (long i = 1; i <= k; ++i) {
      RingElement2 term =
          c[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i)];
      if (i % 2 == 0) term = -term;
      acc += term;
    }
    acc *= make_rational(Integer(1), Integer(k));
    c[static_cast<std::size_t>(k)] = acc;
    out.comp[static_cast<std::size_t>(k)] = std::move(acc);
  }
  return out;
}

ChernData ch_from_chern_classes(const ChernData& cd) {
  if (cd.kind != ChernKind::total_class)
    throw ConsistencyError("ch_from_chern_classes expects total Chern classes");
  const long kmax = cd.max_degree();
  if (kmax < 0) throw ConsistencyError("empty Chern data");
  const long genus = kmax >= 1 ? cd.comp[1].genus : 0;

  std::vector<RingElement2> c(static_cast<std::size_t>(kmax) + 1, RingElement2(genus));
  c[0] = RingElement2::unit(genus);
  for (long k = 1; k <= kmax; ++k) c[static_cast<std::size_t>(k)] = cd.comp[static_cast<std::size_t>(k)];

  ChernData out;
  out.kind = ChernKind::character;
  out.rank = cd.rank;
  out.comp.assign(static_cast<std::size_t>(kmax) + 1, RingElement2(genus));
  std::vector<RingElement2> p(static_cast<std::size_t>(kmax) + 1, RingElement2(genus));
  for (long k = 1; k <= kmax; ++k) {
    RingElement2 acc(genus);
    for (long i = 1; i <= k - 1; ++i) {
      RingElement2 term =
          c[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k - i)];
      if (i % 2 == 0) term = -term;
      acc += term;
    }
    RingElement2 kck = c[static_cast<std::size_t>(k)] * Rational(k);
    if (k % 2 == 0) kck = -kck;
    acc += kck;
    p[static_cast<std::size_t>(k)] = acc;
    out.comp[static_cast<std::size_t>(k)] = acc * inv_factorial(k);
  }
  return out;
}

RingElement2 total_from_classes(const ChernData& c) {
  if (c.kind != ChernKind::total_class)
    throw ConsistencyError("total_from_classes expects total Chern classes");
  const long kmax = c.max_degree();
  const long genus = kmax >= 1 ? c.comp[1].genus : 0;
  RingElement2 out = RingElement2::unit(genus);
  for (long k = 1; k <= kmax; ++k) out += c.comp[static_cast<std::size_t>(k)];
  return out;
}

RingElement2 difference_chern(long j, int which, const ChowParams& p) {
  if (which == 0) {
    RingElement2 out(p.g);
    out.a = ThetaPoly::theta_power_over_factorial(p.g, j);
    return out;
  }
  const RingElement2 total = total_from_classes(chern_classes_from_ch(ch_M1(p)));
  return graded_piece(total * exp_theta(p.g), j);
}

}  // namespace secdiv
