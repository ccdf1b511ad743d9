#pragma once
// Self-verification suite: every structural claim the library rests on,
// re-checked from scratch against the golden fixtures and brute-force
// oracles, reported with stable check ids. The report is the single
// source for the acceptance gate and the CLI `verify` subcommand.

#include <optional>
#include <string>
#include <vector>

#include "zd/emit.hpp"

namespace zd {

struct VerificationCheck {
  std::string id;     // stable, dot-separated
  int criterion = 0;  // acceptance criterion 1..12 the check feeds
  std::string description;
  bool pass = false;
  std::string details;  // measured values, or the first mismatch
};

struct VerificationReport {
  std::string suite;
  std::vector<VerificationCheck> checks;
  int passed = 0;
  int failed = 0;
  bool ok() const { return failed == 0; }
};

enum class VerifySuite { all, core, boxkite, flowmorph, pathion };

std::optional<VerifySuite> suite_from_name(const std::string& name);

// Runs the suite's checks; "core" covers the algebra table, triples,
// the brute-force zero-divisor scan, GoTo listings, production rules,
// and the two numeric laws; "boxkite" the kite geometry, recombinant
// DNA, Seinfeld and lanyard censuses; the rest are self-describing.
VerificationReport run_verification(VerifySuite suite);

// Only the checks feeding one acceptance criterion (1..12).
VerificationReport run_verification_criterion(int criterion);

std::string verification_text(const VerificationReport& r);
Json verification_json(const VerificationReport& r);

}  // namespace zd
