// Acceptance gate: runs the verification checks behind each numbered
// criterion and prints one PASS/FAIL line per criterion. With an
// argument 1..12 it runs that criterion alone. Exits nonzero iff any
// executed check failed.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "zd/verify.hpp"

namespace {

constexpr const char* kTitles[12] = {
    "multiplication-table fidelity",
    "triple counts and listings",
    "zero-divisor completeness scan",
    "GoTo listings and eight-ball exclusion",
    "box-kite assembly and insulation",
    "production rules",
    "recombinant-DNA strut jumping",
    "Seinfeld hyperplane census",
    "flowmorphism suite",
    "pathion extension",
    "numeric zip and power laws",
    "lanyard census",
};

int run_criterion(int k) {
  const zd::VerificationReport report = zd::run_verification_criterion(k);
  std::printf("criterion %2d: %s — %s\n", k,
              report.failed == 0 ? "PASS" : "FAIL", kTitles[k - 1]);
  for (const zd::VerificationCheck& c : report.checks)
    std::printf("    [%s] %s :: %s\n", c.pass ? "PASS" : "FAIL",
                c.id.c_str(),
                c.details.empty() ? c.description.c_str()
                                  : c.details.c_str());
  return report.failed;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 12) {
      std::fprintf(stderr, "usage: acceptance [criterion 1..12]\n");
      return 2;
    }
  }

  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  if (only)
    failed = run_criterion(only);
  else
    for (int k = 1; k <= 12; ++k) failed += run_criterion(k);

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::printf("%s in %.1f s\n", failed == 0 ? "all criteria hold" : "failures present",
              elapsed);
  return failed == 0 ? 0 : 1;
}
