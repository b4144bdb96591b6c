#pragma once

// The acceptance criteria as runnable checks, shared by the CLI `selftest`
// command and the acceptance test binary.

#include <functional>
#include <string>
#include <vector>

namespace braces {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct SelftestOptions {
  /// primes whose parts of the suite run; parts for other primes are skipped
  std::vector<int> primes{2, 3, 5};
  /// adds the (Z/3)^3 enumeration and the p = 5 pairwise classification
  bool deep = false;
  int jobs = 1;
  unsigned seed = 20240611;
  /// which criteria to run (1..11); empty = all
  std::vector<int> only;
};

/// Runs the criteria in order. on_result, if set, is called as each finishes.
std::vector<CriterionResult> run_selftest(const SelftestOptions& opts,
                                          const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_result(const CriterionResult& r);

}  // namespace braces
