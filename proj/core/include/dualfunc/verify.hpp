#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dualfunc::verify {

/// Outcome of one named identity/property check inside a suite.
struct CheckResult {
  std::string name;
  double worst_residual = 0.0;  // normalized to the check's own scale
  double tolerance = 0.0;
  int cases = 0;
  bool pass = false;
};

/// Registered suite names, in the order `verify all` runs them.
const std::vector<std::string>& suite_names();

bool has_suite(const std::string& name);

/// Runs one suite. Randomized grids derive their stream from (seed, name),
/// so the same invocation always produces byte-identical results regardless
/// of which other suites run. Throws DomainError for an unknown name.
std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed);

}  // namespace dualfunc::verify
