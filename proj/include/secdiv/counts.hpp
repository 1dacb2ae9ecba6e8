#pragma once

#include <string>
#include <vector>

#include "secdiv/arith.hpp"
#include "secdiv/params.hpp"

namespace secdiv {

enum class FormulaTag { general_sum, product_special, interpolation };

std::string formula_tag_str(FormulaTag tag);

/// An exact count together with the inputs and the formula that produced it.
/// Counts are held as rationals; integrality and nonnegativity are enforced
/// on construction.
struct CountResult {
  Rational value;
  FormulaTag tag = FormulaTag::general_sum;
  long g = 0;
  long r = 0;
  long d = 0;
  VanishingSequence a;
};

/// Castelnuovo-type count of pairs (point, linear series) with vanishing
/// sequence a, as a sum over index pairs (j1, j2). Requires
/// rho_pointed(g,r,d,a) = -1. Non-strictly-increasing sequences are accepted
/// and evaluate to 0 through vanishing difference factors; out-of-range
/// entries annihilate through the 1/k! = 0 (k < 0) convention.
CountResult castelnuovo_count(long g, long r, long d, const VanishingSequence& a);

/// The same count for the staircase sequence a = (0,...,t-1, n,...,n+r-t),
/// in closed product form.
CountResult secant_point_count(const SecantParams& p);

/// Count of pairs (x, l) with vanishing delta at the moving point x and
/// n - delta at a fixed general point:
///   T(delta) = secant_point_count(p) * delta(n*delta - 1) / (n(n^2 - 1)).
/// delta = 0 is admitted and returns 0.
CountResult pointed_secant_count(const SecantParams& p, long delta);

/// Factorial variant of the Vandermonde determinant:
///   prod_{i<j}(b_j - b_i) / prod_k b_k!
/// evaluated both in closed form and as det[ 1/(b_i - r + j)! ]; the two
/// routes must agree, and the agreed value is returned.
Rational vandermonde_delta(const std::vector<long>& b);

}  // namespace secdiv
