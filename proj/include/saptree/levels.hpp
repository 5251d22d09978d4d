#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "saptree/forest.hpp"
#include "saptree/trace.hpp"

namespace saptree {

enum class TurnClass : std::uint8_t {
  dist_infinite,
  no_dispatch,
  case_slow,  // dispatcher level grows by less than a factor of beta
  case_jump,  // ... by at least a factor of beta
};

const char* to_string(TurnClass c);

/// Growth factor and the two constants derived from it.
struct ChargeParams {
  double beta = 2.0;

  /// Throws invalid_argument unless beta > 1.
  explicit ChargeParams(double beta);
  double rho() const { return (beta - 1.0) / (beta + 1.0); }
  double delta() const { return 2.0 * beta / (beta - 1.0); }
  /// Whether a component of `size` vertices qualifies for tokens on level l.
  bool qualifies(std::uint64_t size, std::uint64_t l) const;
};

TurnClass classify_turn(const TurnRecord& rec, double beta);
TurnClass classify_turn(const ScenarioTrace& trace, TurnIndex t, double beta);

/// Point in time of the level function: turn t, or the half-turn t - 1/2.
struct LevelTime {
  TurnIndex t = 0;
  bool half = false;
};

Distance level_at(const ScenarioTrace& trace, VertexId v, LevelTime when);

/// Subgraph of the final forest induced by the vertices whose level at
/// `when` is at least l.
InducedGraph level_forest(const ScenarioTrace& trace, LevelTime when,
                          std::uint64_t l);

// ---------------------------------------------------------------------------
// Budgets

struct Budgets {
  long double prefix = 0;  // 2n
  long double slow = 0;    // 2 beta n + beta n log2 n
  long double jump = 0;    // beta(beta+1)/(beta-1)^2 n (2 ln n + 3.4) + n
  long double total() const { return prefix + slow + jump; }
};

Budgets budgets(std::uint64_t n, double beta);

struct AggregateReport {
  double beta = 2.0;
  std::uint64_t n = 0;
  std::uint64_t sum_dist = 0;    // over turns with finite dist
  std::uint64_t sum_pi = 0;      // applied augmenting paths
  std::uint64_t sum_prefix = 0;
  std::uint64_t sum_slow_suffix = 0;
  std::uint64_t sum_jump_suffix = 0;
  std::size_t slow_turns = 0;
  std::size_t jump_turns = 0;
  std::size_t no_dispatch_turns = 0;
  std::size_t infinite_turns = 0;
  Budgets budget;

  bool prefix_ok() const { return sum_prefix <= budget.prefix; }
  bool slow_ok() const { return sum_slow_suffix <= budget.slow; }
  bool jump_ok() const { return sum_jump_suffix <= budget.jump; }
  bool total_ok() const { return sum_dist <= budget.total(); }
  /// dist splits into prefix and suffix on every finite turn.
  bool decomposition_ok() const {
    return sum_dist == sum_prefix + sum_slow_suffix + sum_jump_suffix;
  }
};

AggregateReport aggregate_bounds(const ScenarioTrace& trace, double beta);

// ---------------------------------------------------------------------------
// Degree-two scenarios

struct Lemma12Report {
  std::uint64_t n = 0;            // white count
  std::uint64_t path_sum = 0;     // sum of |path_t(b_t)|
  std::size_t deaths = 0;
  std::size_t infinite_turns = 0;
  bool bound_ok = false;          // path_sum <= n log2 n, compared exactly
  bool ok() const { return bound_ok && deaths == 0 && infinite_turns == 0; }
};

/// Throws precondition when some arrival has fewer than two neighbors.
Lemma12Report check_lemma12(const ScenarioTrace& trace);

/// Exact test of s <= n log2 n, i.e. 2^s <= n^n.
bool within_n_log2_n(std::uint64_t s, std::uint64_t n);

// ---------------------------------------------------------------------------
// Slow turns

struct SlowTurnAudit {
  TurnIndex t = 0;
  std::size_t suffix_len = 0;
  Distance dist_prev;           // dist_{t-1} of the dispatching vertex
  bool inequality = false;      // suffix_len < beta * dist_prev
  bool dispatch_not_arrival = false;
  bool deaths_connected = false;
  bool suffix_in_one_part = false;
  bool charged_to_small_part = false;  // else charged along the side path
  bool side_path_ok = true;
  std::string detail;

  bool ok() const {
    return inequality && dispatch_not_arrival && deaths_connected &&
           suffix_in_one_part && side_path_ok;
  }
};

struct SlowAuditReport {
  std::vector<SlowTurnAudit> turns;
  std::uint64_t suffix_sum = 0;
  long double budget = 0;
  std::uint32_t max_halving_charges = 0;
  long double halving_bound = 0;  // log2(2n)
  std::uint64_t side_path_charges = 0;

  bool ok() const;
};

/// Replays every slow turn against the final forest: the dying set is
/// connected, the suffix sits in one surviving part, and each charge either
/// halves a part or lands on vertices outside the largest part.
SlowAuditReport audit_case_slow(const ScenarioTrace& trace, double beta);

// ---------------------------------------------------------------------------
// Token ledger

/// Relative slack when comparing fractional token amounts.
inline constexpr double kTokenTolerance = 1e-9;

struct LedgerViolation {
  std::string kind;
  TurnIndex turn = 0;
  std::uint64_t level = 0;
  std::string detail;
};

struct JumpTurnLedger {
  TurnIndex t = 0;
  std::uint64_t low = 0;   // level_{t-1} of the dispatching vertex
  std::uint64_t high = 0;  // level_t of the dispatching vertex
  std::uint64_t merge_levels = 0;  // levels on which two funded parts met
  std::uint64_t claim_levels = 0;  // size of the two-part guarantee range
  double utilized = 0;
  double required = 0;
};

struct LedgerReport {
  double beta = 2.0;
  double rho = 0;
  double delta = 0;
  std::uint64_t n = 0;
  std::uint64_t levels = 0;
  std::vector<JumpTurnLedger> jump_turns;

  // Token counts in units of delta.
  std::uint64_t funded = 0;
  std::uint64_t utilized = 0;
  std::uint64_t held = 0;
  std::uint64_t retired = 0;
  std::uint64_t transfers = 0;

  double total_payment = 0;
  double max_vertex_payment = 0;
  double payment_bound = 0;  // (delta/rho)(ln 2n + 1)
  std::uint64_t claim_checks = 0;

  /// Jump turns whose utilization falls below the required amount, and
  /// those that also fall below the amount the two-part range guarantees.
  std::size_t utilization_shortfalls = 0;
  std::size_t guarantee_shortfalls = 0;

  std::vector<LedgerViolation> violations;
  bool feasible() const { return violations.empty(); }
};

/// Level-by-level simulation of the component token scheme over all turns
/// and half-turns. Violations are collected, never thrown, unless `strict`
/// is set (then the first one raises ledger_infeasible).
LedgerReport run_token_ledger(const ScenarioTrace& trace, double beta,
                              bool strict = false);

struct Claim19Level {
  std::uint64_t level = 0;
  std::size_t first_size = 0;
  std::size_t second_size = 0;
  bool separate = false;
  bool ok = false;
};

struct Claim19Report {
  TurnIndex t = 0;
  std::uint64_t l0 = 0;
  std::uint64_t l1 = 0;
  std::vector<Claim19Level> levels;
  bool ok() const;
};

/// Direct check by graph search on every level of the guarantee range.
/// Throws invalid_argument unless turn t is a jump turn.
Claim19Report check_claim19(const ScenarioTrace& trace, TurnIndex t, double beta);

}  // namespace saptree
