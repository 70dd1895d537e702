// SPDX-License-Identifier: Apache-2.0
//
// One-shot verification of the project's headline numerical claims, at
// full Monte Carlo scale. Each check pins its threshold; the report is
// one line per check.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rebit {

struct VerifyConfig {
  std::uint64_t master_seed = 12345;
  std::uint64_t chunk_size = 4096;
  unsigned workers = 0;   // 0 = one per hardware thread
  double scale = 1.0;     // multiplies sample counts; thresholds never move
  bool corrupt_boundary = false;  // test hook: shifts the boundary to force a failure
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double observed = 0.0;
  double threshold = 0.0;
  std::string detail;
};

std::vector<CheckResult> run_acceptance_checks(const VerifyConfig& config);

bool all_passed(const std::vector<CheckResult>& checks);

/// One "PASS/FAIL <name> observed=... threshold=..." line per check.
void write_report(const std::vector<CheckResult>& checks, std::ostream& out);

}  // namespace rebit
