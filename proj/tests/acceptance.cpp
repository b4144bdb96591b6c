// Runs acceptance criteria 1 to 11 and prints one PASS/FAIL line each.
// Usage: acceptance [--quick]   (--quick skips the (Z/3)^3 enumeration and
// the p = 5 pairwise classification)

#include <cstring>
#include <iostream>

#include "braces/selftest.hpp"

int main(int argc, char** argv) {
  braces::SelftestOptions opts;
  opts.deep = !(argc > 1 && std::strcmp(argv[1], "--quick") == 0);
  int failed = 0;
  braces::run_selftest(opts, [&](const braces::CriterionResult& r) {
    std::cout << braces::format_result(r) << std::endl;
    if (!r.pass) ++failed;
  });
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << "(" << 11 - failed << "/11)" << std::endl;
  return failed ? 1 : 0;
}
