#pragma once

#include <string>
#include <vector>

#include "secdiv/params.hpp"

namespace secdiv {

enum class VerifyLevel { quick, full };

struct SuiteResult {
  std::string name;
  bool passed = false;
  long cases = 0;
  std::string counterexample;  // first failure, empty when passed
};

/// All validating tuples with g in [g_min, g_max], r <= r_max, n <= n_max
/// (d pinned by the codimension condition), optionally filtered by the
/// nonemptiness conditions.
std::vector<SecantParams> desk_enumeration(long g_min, long g_max, long r_max,
                                           long n_max, bool require_nonempty);

// Identity suites. Each runs fixture-scale checks at quick level and the
// full desk-scale sweep at full level.
SuiteResult suite_product_vs_sum(VerifyLevel level);
SuiteResult suite_oracle_T(VerifyLevel level);
SuiteResult suite_quadratic_interpolation(VerifyLevel level);
SuiteResult suite_grr_pushforward(VerifyLevel level, unsigned seed);
SuiteResult suite_chern_class_pipeline(VerifyLevel level, unsigned seed);
SuiteResult suite_ring_axioms(VerifyLevel level, unsigned seed);
SuiteResult suite_vandermonde(VerifyLevel level, unsigned seed);
SuiteResult suite_mu_nu_sigma(VerifyLevel level);
SuiteResult suite_weierstrass(VerifyLevel level);
SuiteResult suite_pointed_moduli_identities(VerifyLevel level);
SuiteResult suite_symmetric_product_routes(VerifyLevel level);
SuiteResult suite_coverage(VerifyLevel level);
SuiteResult suite_twist_independence(VerifyLevel level);
SuiteResult suite_residuation(VerifyLevel level);
SuiteResult suite_count_endpoints(VerifyLevel level);
SuiteResult suite_golden_values(VerifyLevel level);

/// Every suite in a fixed order.
std::vector<SuiteResult> run_verification(VerifyLevel level, unsigned seed);

}  // namespace secdiv
