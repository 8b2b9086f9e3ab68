#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mvse::cli {

struct SelftestOptions {
  std::uint64_t seed = 20240613;
  /// Name of a deliberately corrupted routine to swap in ("volume" replaces
  /// the minor-sum volume formula). Empty for a normal run.
  std::string mutation;
};

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;  ///< first counterexample when failed
};

struct SelftestReport {
  std::vector<CheckOutcome> checks;
  bool all_passed() const;
  /// Fixed-width pass/fail table, one line per check.
  std::string table() const;
};

/// Runs the bundled corpus: the documented worked examples of every module
/// and the randomized invariant suites at fixed seeds.
SelftestReport run_selftest(const SelftestOptions& options);

/// Names of the available mutations.
std::vector<std::string> selftest_mutations();

}  // namespace mvse::cli
