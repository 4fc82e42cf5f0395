#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crystal/weyl.hpp"

namespace crystal {

// One verification suite run: a pass/fail, how many elementary checks were
// made, and the first failure (or a short summary) in detail.
struct SuiteResult {
  std::string name;
  bool passed = true;
  size_t checks = 0;
  std::string detail;
};

// Direct recursive count of semistandard tableaux, independent of the
// crystal-generated enumeration.
size_t count_ssyt_direct(const Partition& lambda, int n);

// The ten suites; bounds are exclusive-of-nothing (a suite enumerates all
// of its cases below or at the bound).
SuiteResult suite_cauchy_lower(int max_n, int max_degree);
SuiteResult suite_cauchy_staircase(int max_n, int max_degree);
SuiteResult suite_littlewood(int max_n, int max_degree);
SuiteResult suite_main_bijection(int max_n, Coord max_entry_sum);
SuiteResult suite_demazure_oracle(int max_n, Coord max_size);
SuiteResult suite_psi_isomorphism(int max_n, Coord max_size);
SuiteResult suite_bicrystal_commutation(int max_n, Coord max_entry_sum);
SuiteResult suite_low_closure(int max_n, Coord max_entry_sum);
SuiteResult suite_continuous(int max_n, std::uint64_t seed, int group_law_trials,
                             int commutation_trials, int main2_trials, int max_denominator);
SuiteResult suite_negative_control(int max_n, int degree);

// Every suite below the given bounds, deterministic for a fixed seed;
// max_n <= 0 yields an empty run.
std::vector<SuiteResult> verify_all(int max_n, int max_degree, std::uint64_t seed);

}  // namespace crystal
