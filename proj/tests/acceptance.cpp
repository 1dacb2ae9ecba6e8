// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
// Every check is exact; there are no tolerances anywhere.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "secdiv/chern.hpp"
#include "secdiv/counts.hpp"
#include "secdiv/errors.hpp"
#include "secdiv/fulton_pragacz.hpp"
#include "secdiv/moduli.hpp"
#include "secdiv/symprod.hpp"
#include "secdiv/verification.hpp"

using namespace secdiv;

namespace {

struct Criterion {
  std::string description;
  std::function<SuiteResult()> run;
};

SuiteResult merge(const std::string& name, std::vector<SuiteResult> parts) {
  SuiteResult out{name, true, 0, ""};
  for (auto& part : parts) {
    out.cases += part.cases;
    if (!part.passed && out.passed) {
      out.passed = false;
      out.counterexample = part.name + ": " + part.counterexample;
    }
  }
  return out;
}

}  // namespace

int main() {
  const unsigned seed = 20240915;
  const std::vector<Criterion> criteria = {
      {"formula cross-validation (g<=12, r<=4, n<=10): product = sum",
       [] { return suite_product_vs_sum(VerifyLevel::full); }},
      {"symbolic oracle (g<=8, r<=3, all delta): determinant = T(delta), quadratic",
       [] {
         return merge("oracle", {suite_oracle_T(VerifyLevel::full),
                                 suite_quadratic_interpolation(VerifyLevel::full)});
       }},
      {"GRR reproduction: pushforward character and Chern classes match print",
       [seed] {
         return merge("grr", {suite_grr_pushforward(VerifyLevel::full, seed),
                              suite_chern_class_pipeline(VerifyLevel::full, seed)});
       }},
      {"mu = nu * sigma for every valid tuple with g in 3..12",
       [] { return suite_mu_nu_sigma(VerifyLevel::full); }},
      {"Weierstrass anchors: counts g in 2..20, classes g in 3..15",
       [] { return suite_weierstrass(VerifyLevel::full); }},
      {"n-pointed class identities: c_{0:j} recursion and T(1) test curve",
       [] { return suite_pointed_moduli_identities(VerifyLevel::full); }},
      {"symmetric-product routes: pullback equality, ray, r=1 reduction",
       [] { return suite_symmetric_product_routes(VerifyLevel::full); }},
      {"coverage scan: witnesses for all g in 4..30, ceil(g/2) <= n <= g-2",
       [] { return suite_coverage(VerifyLevel::full); }},
      {"golden values: 24, 240, T(1)=20, 5theta-10x, 2theta-4x",
       [] { return suite_golden_values(VerifyLevel::full); }},
  };

  bool all_passed = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    SuiteResult result;
    const auto start = std::chrono::steady_clock::now();
    try {
      result = criteria[i].run();
    } catch (const std::exception& e) {
      result = SuiteResult{criteria[i].description, false, 0, e.what()};
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::printf("criterion %zu/%zu: %s  %s (%ld cases, %lld ms)\n", i + 1,
                criteria.size(), result.passed ? "PASS" : "FAIL",
                criteria[i].description.c_str(), result.cases,
                static_cast<long long>(elapsed));
    if (!result.passed) {
      std::printf("  first counterexample: %s\n", result.counterexample.c_str());
      all_passed = false;
    }
  }
  return all_passed ? 0 : 1;
}
