#pragma once

#include <optional>

#include "secdiv/chern.hpp"
#include "secdiv/counts.hpp"
#include "secdiv/params.hpp"

namespace secdiv {

/// Degree of the determinantal class of the rank-drop locus of the flagged
/// bundle pair, evaluated symbolically: builds the (r+1) x (r+1) matrix of
/// difference Chern classes (r+1-t rows of c^{(1)}, then t rows of c^{(0)},
/// row start indices decreasing by one within each block, columns stepping
/// by one), takes a division-free determinant in the two-factor ring, and
/// applies the degree functional. Equals pointed_secant_count(p, delta).
Rational fulton_pragacz_T(const SecantParams& p, long delta,
                          std::optional<long> twist = std::nullopt);

}  // namespace secdiv
