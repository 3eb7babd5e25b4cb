#pragma once

#include <string>
#include <vector>

#include "polyhom/polyhom.hpp"

namespace polyhom {

struct SuiteResult {
  std::string name;
  long checked = 0;
  long failed = 0;
  std::string detail;
  bool ok() const { return failed == 0 && checked > 0; }
};

struct VerifyOptions {
  unsigned long long seed = 20250809;
  int pair_samples = 520;        // composable pairs for the functoriality sweep
  int triple_samples = 220;      // associativity triples
  int scalar_samples = 220;      // bare-relation identity pairs
  int chi_samples = 1200;        // random (2,2,2) characteristic matrices
  int fp_random_pairs = 500;     // random p=3 compositions against the oracle
  long realize_budget = 200;     // search candidates before constructing
  int realize_extra_exponents = 2;  // weights checked per carrier beyond the minimum
};

std::vector<std::string> suite_names();
// Runs one named suite, or all of them for "all".
std::vector<SuiteResult> run_suites(const std::string& name, const VerifyOptions& opt = {});

// The deterministic group pool behind the sweeps: cyclic, Klein, symmetric
// and product groups up to order 16, point mass one.
std::vector<MeasuredGroup> group_pool();

}  // namespace polyhom
