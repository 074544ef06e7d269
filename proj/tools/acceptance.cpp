// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <string>

#include "campanato/checks.hpp"

int main(int argc, char** argv) {
  using namespace campanato;
  GridConfig grid;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) only = std::stoi(argv[++i]);
  }
  int failed = 0;
  for (int k = 1; k <= kAcceptanceCount; ++k) {
    if (only != 0 && k != only) continue;
    const CheckResult r = acceptance_criterion(k, grid);
    std::printf("%s %-4s %s | value=%.6g threshold=%.6g | %s (%.1f s)\n", r.passed ? "PASS" : "FAIL", r.id.c_str(),
                r.name.c_str(), r.value, r.threshold, r.detail.c_str(), r.seconds);
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
