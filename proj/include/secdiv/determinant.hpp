#pragma once

#include <cstddef>
#include <vector>

namespace secdiv {

// Division-free determinant over any commutative arithmetic type, by
// dynamic programming over column subsets (expansion along the last used
// row). Suitable for ring-valued entries where elimination is unavailable.
template <typename T>
T subset_determinant(const std::vector<std::vector<T>>& m, const T& zero,
                     const T& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  std::vector<T> dp(std::size_t(1) << n, zero);
  dp[0] = one;
  for (std::size_t mask = 1; mask < dp.size(); ++mask) {
    const int row = __builtin_popcountll(mask) - 1;
    T acc = zero;
    int pos = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      T term = m[static_cast<std::size_t>(row)][j] * dp[mask ^ (std::size_t(1) << j)];
      if ((row + pos) % 2 != 0)
        acc -= term;
      else
        acc += term;
      ++pos;
    }
    dp[mask] = acc;
  }
  return dp.back();
}

}  // namespace secdiv
