#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arbor/random.hpp"

namespace arbor {

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  /// Caps the vertex count of every oracle-backed suite (1..10). Unset keeps
  /// each suite's own size.
  std::optional<std::size_t> size_bound;
  /// Overrides the number of random cases of every randomized suite (>= 1).
  std::optional<std::size_t> sample_count;
};

/// Throws InvalidArgument for size_bound outside 1..10 or sample_count 0.
void validate(const RunConfig& cfg);

struct SuiteResult {
  std::string name;
  std::string title;
  std::size_t cases = 0;
  std::vector<std::string> failures;  // one line each, case index first
};

struct SelftestReport {
  RunConfig config;
  std::vector<SuiteResult> suites;

  bool passed() const;
  /// Byte-for-byte deterministic given the config: one line per suite, failure
  /// details with a reproducer command line, and a total line.
  std::string render() const;
};

/// Names of the suites in run order.
std::vector<std::string> suite_names();

/// Runs one named suite. Throws InvalidArgument for an unknown name.
SuiteResult run_suite(const std::string& name, const RunConfig& cfg);

/// Runs every suite, or just `only` when given.
SelftestReport run_selftest(const RunConfig& cfg, const std::optional<std::string>& only = std::nullopt);

/// The reproducer command line for a suite under a config.
std::string reproducer(const RunConfig& cfg, const std::string& suite);

}  // namespace arbor
