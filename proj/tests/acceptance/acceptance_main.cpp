// Acceptance runner: one line per criterion, nonzero exit on any failure.
// Everything is exact rational arithmetic; "pass" means exact equality held
// on every checked instance.

#include <chrono>
#include <cstdio>

#include "polyhom/verify.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  polyhom::VerifyOptions opt;
  auto names = polyhom::suite_names();
  bool all_ok = true;
  int idx = 0;
  for (const auto& name : names) {
    ++idx;
    auto t0 = clock::now();
    polyhom::SuiteResult res;
    try {
      res = polyhom::run_suites(name, opt).at(0);
    } catch (const std::exception& e) {
      res.name = name;
      res.checked = 1;
      res.failed = 1;
      res.detail = e.what();
    }
    double secs = std::chrono::duration<double>(clock::now() - t0).count();
    std::printf("criterion %2d  %-19s checked=%-6ld failed=%-4ld %-4s (%.1fs)\n", idx,
                res.name.c_str(), res.checked, res.failed, res.ok() ? "PASS" : "FAIL", secs);
    if (!res.ok()) {
      all_ok = false;
      if (!res.detail.empty()) std::printf("              detail: %s\n", res.detail.c_str());
    }
  }
  std::printf("overall: %s\n", all_ok ? "PASS" : "FAIL");
  return all_ok ? 0 : 1;
}
