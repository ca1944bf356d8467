#pragma once

// Batch verification: parameter grids for every identity, a worker pool and
// report streaming in parameter order.

#include "ctkit/identities.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ctkit {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string identity;
  int n_lo = 2, n_hi = 3;
  int a_max = 2;
  int m_max = 2;
  std::optional<int> sum_max;  ///< bound on |a| where a grid ranges over a
  TMode t_mode = TMode::symbolic;
  int jobs = 1;
  std::string format = "text";  ///< text or json
  std::optional<std::uint64_t> seed;
  std::optional<std::chrono::milliseconds> budget;
  bool timing = false;
};

/// Throws UsageError on a malformed configuration.
void validate(const RunConfig& c);

struct Case {
  nlohmann::ordered_json params;
  /// Returns (lhs, rhs) rendered canonically.
  std::function<std::pair<std::string, std::string>()> run;
};

struct IdentityInfo {
  std::string name;
  std::string summary;
  std::function<std::vector<Case>(const RunConfig&)> enumerate;
};

const std::vector<IdentityInfo>& identity_registry();
const IdentityInfo* find_identity(std::string_view name);

/// Runs one case under the configured budget; never throws.
VerifyReport run_case(const std::string& identity, const Case& c, std::optional<std::chrono::milliseconds> budget);

/// Runs every case on `jobs` threads and hands the reports to `sink` in
/// case order as soon as each prefix is complete.
void run_cases(const std::string& identity, const std::vector<Case>& cases, int jobs,
               std::optional<std::chrono::milliseconds> budget, const std::function<void(const VerifyReport&)>& sink);

/// 0 if every report is equal, 1 on any mismatch or error, 3 if the only
/// failures are timeouts.
int exit_status(const std::vector<VerifyReport>& reports);

/// Enumerates, runs and collects. Throws UsageError for an unknown identity.
std::vector<VerifyReport> run(const RunConfig& config, const std::function<void(const VerifyReport&)>& sink = {});

/// One report in the configured format, without a trailing newline.
std::string format_report(const VerifyReport& r, const RunConfig& config);

/// "3" -> (3, 3); "1-4" -> (1, 4). Throws UsageError.
std::pair<int, int> parse_range(std::string_view text);

}  // namespace ctkit
