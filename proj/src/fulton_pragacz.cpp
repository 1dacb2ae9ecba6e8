#include "secdiv/fulton_pragacz.hpp"

#include <vector>

#include "secdiv/determinant.hpp"
#include "secdiv/errors.hpp"

namespace secdiv {

Rational fulton_pragacz_T(const SecantParams& p, long delta,
                          std::optional<long> twist) {
  if (delta < 0 || delta > p.n)
    throw ValidationError(ValidationKind::delta_range,
                          "delta must lie in 0.." + std::to_string(p.n));

  const long g = p.g, r = p.r, d = p.d, t = p.t, n = p.n;
  const ChowParams cp{g, d, twist.value_or(default_twist(g, d)), n, delta};

  // c^{(1)}_j are the graded pieces of c(M1) * e^{theta}; computing the
  // product once covers every index in the matrix.
  const RingElement2 c1_full =
      total_from_classes(chern_classes_from_ch(ch_M1(cp))) * exp_theta(g);
  const auto c1 = [&](long j) { return graded_piece(c1_full, j); };
  const auto c0 = [&](long j) {
    RingElement2 out(g);
    out.a = ThetaPoly::theta_power_over_factorial(g, j);
    return out;
  };

  const std::size_t size = static_cast<std::size_t>(r + 1);
  std::vector<std::vector<RingElement2>> m(size,
                                           std::vector<RingElement2>(size, RingElement2(g)));
  for (long row = 0; row <= r - t; ++row) {
    const long start = g - d + r + n - t - row;
    for (long col = 0; col <= r; ++col)
      m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = c1(start + col);
  }
  for (long k = 0; k < t; ++k) {
    const long row = r + 1 - t + k;
    const long start = g - d + t - 1 - k;
    for (long col = 0; col <= r; ++col)
      m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = c0(start + col);
  }

  const RingElement2 det =
      subset_determinant(m, RingElement2(g), RingElement2::unit(g));
  return degree_integral(det);
}

}  // namespace secdiv
