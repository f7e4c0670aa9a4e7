#pragma once

// Command-line front end. Split from main() so tests can drive it in-process.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coinbound/core.hpp"

namespace coinbound::cli {

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kCapacityEnvVar = "COINBOUND_CAPACITY";

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitDomain = 2,
  kExitMismatch = 3,
};

struct VerifyConfig {
  Int m_max = 0;
  Int bound_factor = 2;
  Int capacity = 0;
  Int gap_stride = 1;
  unsigned jobs = 1;
};

struct Mismatch {
  Int m, n, max_a, max_b;
  std::string what;  // "count" or "gaps"
  Int formula;
  Int oracle;
};

struct VerifySummary {
  Int pairs = 0;
  Int checked = 0;
  Int gap_checked = 0;
  Int skipped = 0;
  Int mismatches = 0;
  std::optional<Mismatch> first_mismatch;
};

/// Closed form vs oracle over every coprime 2 <= m < n <= m_max and
/// A in 0..bound_factor*n, B in 0..bound_factor*m, lexicographic order.
/// The result is independent of config.jobs.
VerifySummary run_verify(const VerifyConfig& config);

/// Runs one invocation. args excludes the program name. capacity_env is the
/// raw value of COINBOUND_CAPACITY, if set. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> capacity_env = std::nullopt);

}  // namespace coinbound::cli
