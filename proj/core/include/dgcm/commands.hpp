#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dgcm/problem.hpp"

namespace dgcm {

enum class OutputFormat { Text, Json };

struct RunOptions {
  OutputFormat format = OutputFormat::Text;
  /// NOT_CM / UNKNOWN (or a failing check) exits with code 2.
  bool assert_verdict = false;
  std::optional<std::uint64_t> seed;
  std::optional<int> max_tries;
  std::optional<int> t_max;
  /// Extra primes, each a comma-separated generator list.
  std::vector<std::string> primes;
  bool timing = true;
};

struct CommandResult {
  std::string output;
  int exit_code = 0;
};

const std::vector<std::string>& command_names();

/// Runs one command and renders its report.  `problem` may be null only for
/// "examples".  Library errors propagate as exceptions.
CommandResult run_command(const std::string& command, const Problem* problem, const RunOptions& options);

/// Compact JSON with the pinned quantities of a problem (verdicts,
/// invariants, certificate lengths).
std::string summarize(const Problem& problem);

/// Differences between the problem's "expected" fragment and summarize().
std::vector<std::string> expected_mismatches(const Problem& problem);

/// A JSON report with the timing field removed, for byte comparison.
std::string strip_timing(const std::string& json_report);

}  // namespace dgcm
