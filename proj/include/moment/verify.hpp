#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace moment {

struct CheckResult {
  std::string module;
  std::string name;
  bool passed = false;
  bool informational = false;  // reported, never counted as a failure
  std::string detail;
};

struct VerifySummary {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Module names accepted by run_verify besides "all".
const std::vector<std::string>& verify_suites();

/// Runs the invariant checks of one module (or "all"). Throws std::invalid_argument for
/// an unknown suite name.
VerifySummary run_verify(const std::string& suite, std::uint64_t seed, unsigned threads = 1);

}  // namespace moment
