#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gencal {

struct SuiteCase {
  std::string name;
  bool pass = false;
  std::uint64_t seed = 0;
  std::string detail;  // first counterexample, empty when passing
};

struct SuiteReport {
  std::string suite;
  int passed = 0;
  int failed = 0;
  std::vector<SuiteCase> cases;
};

std::vector<std::string> suite_names();

/// Run one of the per-module property batteries (or "all").  Deterministic
/// for a fixed (name, seed, mode); mode is "float" or "exact" (exact runs
/// the rational kernels where the battery supports them).
SuiteReport run_suite(const std::string& name, std::uint64_t seed = 42,
                      const std::string& mode = "float", double tol = 1e-9);

}  // namespace gencal
