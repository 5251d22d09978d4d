#include "saptree/bench.hpp"

#include <cmath>

#include "json.hpp"

#include "saptree/trace.hpp"

namespace saptree {

BenchRow bench_cell(Family family, std::uint32_t n, std::uint64_t seed, double beta,
                    bool with_ledger) {
  ChargeParams params(beta);
  const auto forest = build_forest(generate(family, n, seed));
  const auto trace = trace_scenario(forest);
  BenchRow row;
  row.family = family;
  row.n = n;
  row.seed = seed;
  row.arrivals = forest.turn();
  const double big_n = static_cast<double>(trace.n());
  row.n_log2_n = big_n > 1 ? big_n * std::log2(big_n) : 0.0;
  row.aggregate = aggregate_bounds(trace, beta);
  bool degree_two = true;
  for (const auto& a : forest.arrivals()) degree_two &= a.size() >= 2;
  if (family == Family::degree2 && degree_two) row.lemma12 = check_lemma12(trace);
  if (with_ledger) {
    const auto ledger = run_token_ledger(trace, beta);
    row.ledger_run = true;
    row.ledger_feasible = ledger.feasible();
    for (const auto& v : ledger.violations) ++row.ledger_violations[v.kind];
    row.ledger_jump_turns = ledger.jump_turns.size();
    row.ledger_max_payment = ledger.max_vertex_payment;
    row.ledger_payment_bound = ledger.payment_bound;
  }
  return row;
}

double fit_constant(const std::vector<BenchRow>& rows) {
  double xy = 0, xx = 0;
  for (const auto& r : rows) {
    xy += r.n_log2_n * static_cast<double>(r.aggregate.sum_dist);
    xx += r.n_log2_n * r.n_log2_n;
  }
  return xx > 0 ? xy / xx : 0.0;
}

std::string bench_report_json(const BenchSummary& summary, double beta) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["beta"] = beta;
  doc["fitted_c"] = summary.fitted_c;
  bool all_ok = true;
  ordered_json rows = ordered_json::array();
  for (const auto& r : summary.rows) {
    all_ok &= r.ok();
    const auto& a = r.aggregate;
    ordered_json row;
    row["family"] = to_string(r.family);
    row["n"] = r.n;
    row["seed"] = r.seed;
    row["arrivals"] = r.arrivals;
    row["sum_dist"] = a.sum_dist;
    row["sum_pi"] = a.sum_pi;
    row["n_log2_n"] = r.n_log2_n;
    row["ratio"] = r.n_log2_n > 0 ? static_cast<double>(a.sum_dist) / r.n_log2_n : 0.0;
    row["turns"] = {{"slow", a.slow_turns},
                    {"jump", a.jump_turns},
                    {"no_dispatch", a.no_dispatch_turns},
                    {"dist_infinite", a.infinite_turns}};
    row["sums"] = {{"prefix", a.sum_prefix},
                   {"slow_suffix", a.sum_slow_suffix},
                   {"jump_suffix", a.sum_jump_suffix}};
    row["budgets"] = {{"prefix", static_cast<double>(a.budget.prefix)},
                      {"slow", static_cast<double>(a.budget.slow)},
                      {"jump", static_cast<double>(a.budget.jump)},
                      {"total", static_cast<double>(a.budget.total())}};
    row["budgets_ok"] = r.budgets_ok();
    if (r.lemma12) {
      row["degree_two"] = {{"path_sum", r.lemma12->path_sum},
                           {"deaths", r.lemma12->deaths},
                           {"within_n_log2_n", r.lemma12->bound_ok}};
    }
    if (r.ledger_run) {
      ordered_json kinds = ordered_json::object();
      for (const auto& [k, c] : r.ledger_violations) kinds[k] = c;
      row["ledger"] = {{"feasible", r.ledger_feasible},
                       {"jump_turns", r.ledger_jump_turns},
                       {"violations", kinds},
                       {"max_vertex_payment", r.ledger_max_payment},
                       {"payment_bound", r.ledger_payment_bound}};
    }
    row["ok"] = r.ok();
    rows.push_back(std::move(row));
  }
  doc["all_ok"] = all_ok;
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace saptree
