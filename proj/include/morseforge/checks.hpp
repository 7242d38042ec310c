// Named end-to-end checks, runnable from the CLI (`check <id>`) and from the
// acceptance test binary. Every check is exact; randomized ones use fixed
// seeds.
#pragma once

#include <string>
#include <vector>

namespace morseforge {

struct CheckResult {
  std::string id;
  bool passed = false;
  std::string detail;
};

std::vector<std::string> check_ids();
CheckResult run_check(const std::string& id);
std::vector<CheckResult> run_all_checks();

}  // namespace morseforge
