// Acceptance suite: every top-level claim the library makes, each run at
// full scale with exact arithmetic, one line per criterion.
//
//   1  non-symmetric Cauchy identity, both lower-triangular forms
//   2  staircase form
//   3  Littlewood identity under y := x
//   4  the bijection M^low -> pairs (P, Q) with its cell conditions
//   5  Demazure characters against the divided-difference oracle, atoms
//   6  the tableau/LS-path isomorphism and operator commutation
//   7  bicrystal commutation of row and column operators
//   8  closure of M^low and classification of raise-extremal matrices
//   9  continuous crystals: group law, scaling, commutation, bijection
//  10  negative control: a perturbed expansion must not compare equal

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "crystal/verify.hpp"

using namespace crystal;

namespace {

struct Criterion {
  std::string id;
  SuiteResult (*run)();
};

SuiteResult run_cauchy_lower() { return suite_cauchy_lower(3, 8); }
SuiteResult run_cauchy_staircase() { return suite_cauchy_staircase(3, 8); }
SuiteResult run_littlewood() { return suite_littlewood(3, 10); }
SuiteResult run_main_bijection() { return suite_main_bijection(3, 4); }
SuiteResult run_demazure_oracle() { return suite_demazure_oracle(3, 4); }
SuiteResult run_psi_isomorphism() { return suite_psi_isomorphism(3, 5); }
SuiteResult run_bicrystal_commutation() { return suite_bicrystal_commutation(3, 4); }
SuiteResult run_low_closure() { return suite_low_closure(3, 4); }
SuiteResult run_continuous() { return suite_continuous(3, 20240801, 1000, 200, 200, 4); }
SuiteResult run_negative_control() { return suite_negative_control(3, 4); }

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"01", run_cauchy_lower},          {"02", run_cauchy_staircase},
      {"03", run_littlewood},            {"04", run_main_bijection},
      {"05", run_demazure_oracle},       {"06", run_psi_isomorphism},
      {"07", run_bicrystal_commutation}, {"08", run_low_closure},
      {"09", run_continuous},            {"10", run_negative_control},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    SuiteResult res;
    try {
      res = c.run();
    } catch (const std::exception& e) {
      res.passed = false;
      res.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %s  %-24s %s  (%zu checks, %.1fs)\n", c.id.c_str(),
                res.name.c_str(), res.passed ? "PASS" : "FAIL", res.checks, secs);
    if (!res.passed) {
      std::printf("              %s\n", res.detail.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
