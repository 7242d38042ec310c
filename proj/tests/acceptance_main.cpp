// Acceptance suite: runs every named check and prints one pass/fail line per
// check. Exit status is nonzero if any check fails.
#include <cstdio>

#include "morseforge/checks.hpp"

int main() {
  bool all_ok = true;
  for (const morseforge::CheckResult& r : morseforge::run_all_checks()) {
    std::printf("[%s] %s: %s\n", r.passed ? "PASS" : "FAIL", r.id.c_str(), r.detail.c_str());
    std::fflush(stdout);
    all_ok = all_ok && r.passed;
  }
  return all_ok ? 0 : 1;
}
