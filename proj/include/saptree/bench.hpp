#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "saptree/levels.hpp"
#include "saptree/scenarios.hpp"

namespace saptree {

struct BenchRow {
  Family family = Family::random_tree;
  std::uint32_t n = 0;
  std::uint64_t seed = 0;
  std::size_t arrivals = 0;
  double n_log2_n = 0;  // of the bound parameter max(whites, arrivals)

  AggregateReport aggregate;
  std::optional<Lemma12Report> lemma12;  // degree2 instances only

  bool ledger_run = false;
  bool ledger_feasible = false;
  std::map<std::string, std::size_t> ledger_violations;  // by kind
  std::size_t ledger_jump_turns = 0;
  double ledger_max_payment = 0;
  double ledger_payment_bound = 0;

  bool budgets_ok() const {
    return aggregate.prefix_ok() && aggregate.slow_ok() && aggregate.jump_ok() &&
           aggregate.total_ok() && aggregate.decomposition_ok();
  }
  bool ok() const {
    return budgets_ok() && (!lemma12 || lemma12->ok()) && (!ledger_run || ledger_feasible);
  }
};

/// Generates, replays and analyses one (family, n, seed) cell.
BenchRow bench_cell(Family family, std::uint32_t n, std::uint64_t seed, double beta,
                    bool with_ledger = true);

struct BenchSummary {
  std::vector<BenchRow> rows;
  /// Least-squares C in sum_dist ~ C * n log2 n (through the origin).
  double fitted_c = 0;
};

double fit_constant(const std::vector<BenchRow>& rows);

/// Structured report (JSON text with a fixed key order).
std::string bench_report_json(const BenchSummary& summary, double beta);

}  // namespace saptree
