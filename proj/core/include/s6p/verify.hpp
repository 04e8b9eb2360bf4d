// The verification battery behind `s6p verify-all`: one named check per
// certified statement, run in a fixed order. Checks are exact wherever the
// statement is exact; float checks carry their tolerances inline.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace s6p {

struct CheckResult {
  std::string slug;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 7;
  int samples = 50;  // base sweep size; individual checks scale it
};

// Runs every check; results come back in the fixed slug order regardless of
// outcome. Throws std::invalid_argument when samples < 1.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace s6p
