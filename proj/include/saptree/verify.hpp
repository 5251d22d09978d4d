#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "saptree/forest.hpp"
#include "saptree/minimax.hpp"
#include "saptree/oracle.hpp"

namespace saptree {

enum class CheckStatus : std::uint8_t { pass, fail, skipped };

const char* to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::uint64_t checked = 0;  // individual assertions evaluated
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;  // units skipped for size reasons
  std::string detail;         // first failure or skip notice
};

struct VerifyOptions {
  OracleBudget budget;
  /// Empty selects every check.
  std::vector<std::string> checks;
  TieBreak order = TieBreak::forward;
  /// Also rerun everything under the opposite tie-break order.
  bool alt_tiebreak = false;
  double beta = 2.0;
  /// Components above this size skip the quadratic cross-checks.
  std::size_t heavy_limit = 2048;
};

struct VerifyReport {
  std::vector<CheckResult> results;
  bool ok() const;
};

/// Names accepted in VerifyOptions::checks, in execution order.
const std::vector<std::string>& check_names();

/// Throws invalid_argument on an unknown check name or beta <= 1.
VerifyReport verify_instance(const OnlineForest& forest, const VerifyOptions& options);

/// Table-level identities at one turn: the det-dist relations that tie
/// dist, sec-dist and their directions together, and path lengths. Takes the
/// table by reference so a deliberately corrupted one can be fed in.
CheckResult check_table_identities(const OnlineForest& forest, TurnIndex t,
                                   const MiniMaxTable& table);

}  // namespace saptree
