#include "saptree/verify.hpp"

#include <algorithm>
#include <optional>

#include "saptree/error.hpp"
#include "saptree/levels.hpp"
#include "saptree/matching.hpp"
#include "saptree/scenarios.hpp"
#include "saptree/trace.hpp"
#include "saptree/vitality.hpp"

namespace saptree {

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }
  const std::string& name() const { return result_.name; }

  template <class Detail>
  void expect(bool cond, Detail&& detail) {
    ++result_.checked;
    if (cond) return;
    if (result_.failed++ == 0) result_.detail = detail();
  }

  void skip(const std::string& why) {
    if (result_.skipped++ == 0 && result_.failed == 0) skip_note_ = why;
  }

  CheckResult finish() {
    auto out = result_;
    if (out.failed > 0) {
      out.status = CheckStatus::fail;
    } else if (out.checked == 0) {
      out.status = CheckStatus::skipped;
      out.detail = skip_note_.empty() ? "not applicable" : skip_note_;
    } else {
      out.status = CheckStatus::pass;
      if (out.skipped > 0) out.detail = "partly skipped: " + skip_note_;
    }
    return out;
  }

 private:
  CheckResult result_;
  std::string skip_note_;
};

std::string turn_text(TurnIndex t) { return "turn " + std::to_string(t); }

Distance level_from(const OnlineForest& f, const MiniMaxTable& table, VertexId v) {
  return f.is_white(v) ? table.sec_dist(v) : table.dist(v);
}

bool wanted(const VerifyOptions& opt, std::string_view name) {
  return opt.checks.empty() ||
         std::find(opt.checks.begin(), opt.checks.end(), name) != opt.checks.end();
}

void table_identities(const OnlineForest& f, const MiniMaxTable& table,
                      std::span<const VertexId> vertices, TurnIndex t, Tally& tally) {
  for (VertexId v : vertices) {
    auto where = [&] { return f.label(v) + " at " + turn_text(t); };
    const auto dir = table.dir(v);
    const auto sec_dir = table.sec_dir(v);
    tally.expect(dir.has_value() == !f.neighbors_view(v, t).empty(),
                 [&] { return "dir defined wrongly for " + where(); });
    if (dir) {
      tally.expect(table.det(v, *dir).value.next() == table.dist(v),
                   [&] { return "dist != det-dist toward dir + 1 for " + where(); });
    }
    if (sec_dir) {
      tally.expect(table.det(v, *sec_dir).value.next() == table.sec_dist(v),
                   [&] { return "sec-dist != det-dist toward sec-dir + 1 for " + where(); });
    } else if (dir) {
      const Distance empty = f.is_white(v) ? Distance(0) : Distance::infinity();
      tally.expect(table.sec_dist(v) == empty,
                   [&] { return "sec-dist of a single-neighbor vertex for " + where(); });
    }
    const Path p = table.path(v);
    if (table.dist(v).is_finite()) {
      tally.expect(p.length() == table.dist(v).value(),
                   [&] { return "path length != dist for " + where(); });
    }
    if (dir) {
      tally.expect(table.det_path(v, *dir) == p,
                   [&] { return "path != det-path toward dir for " + where(); });
      if (sec_dir && table.sec_dist(v).is_finite()) {
        tally.expect(table.sec_path(v).length() == table.sec_dist(v).value(),
                     [&] { return "sec-path length != sec-dist for " + where(); });
      }
    }
    for (VertexId u : f.neighbors_view(v, t)) {
      const Distance det = table.det(u, v).value;
      const Distance expect = dir && *dir == u ? table.sec_dist(v) : table.dist(v);
      tally.expect(det == expect, [&] {
        return "det-dist(" + f.label(u) + "," + f.label(v) + ") != " +
               (dir && *dir == u ? "sec-dist" : "dist") + " at " + turn_text(t);
      });
      const bool sandwich = f.is_black(v)
                                ? table.dist(v) <= det && det <= table.sec_dist(v)
                                : table.sec_dist(v) <= det && det <= table.dist(v);
      tally.expect(sandwich, [&] {
        return "det-dist(" + f.label(u) + "," + f.label(v) + ") outside its bounds at " +
               turn_text(t);
      });
      if (det.is_finite()) {
        tally.expect(table.det_path(u, v).length() == det.value() + 1, [&] {
          return "det-path length mismatch on (" + f.label(u) + "," + f.label(v) + ")";
        });
      }
    }
  }
}

struct Suite {
  const OnlineForest& f;
  const VerifyOptions& opt;
  TieBreak order;

  std::vector<Tally> tallies;
  std::vector<Distance> prev_dist, prev_sec;

  Tally* tally_ptr(std::string_view name) {
    for (auto& t : tallies) {
      if (t.name() == name) return &t;
    }
    throw Error(ErrorCode::invalid_argument, "unknown check " + std::string(name));
  }
  bool on(std::string_view name) const { return wanted(opt, name); }

  void per_turn(const ScenarioTrace& trace, TurnIndex t, const MiniMaxTable& table,
                std::span<const VertexId> comp);
  void per_run(const ScenarioTrace& trace);
};

void Suite::per_turn(const ScenarioTrace& trace, TurnIndex t, const MiniMaxTable& table,
                     std::span<const VertexId> comp) {
  const auto& rec = trace.turn(t);
  const VertexId b = rec.b;
  const auto& life = trace.lifetimes;
  const bool small = comp.size() <= opt.heavy_limit;
  const std::string heavy_note =
      "components above " + std::to_string(opt.heavy_limit) + " vertices";

  if (on("identities")) {
    auto& tally = *tally_ptr("identities");
    table_identities(f, table, comp, t, tally);
    if (small) {
      for (VertexId v : comp) {
        const auto first = dist_dir(f, v, t, order);
        const auto second = sec_dist_dir(f, v, t, order);
        tally.expect(first.value == table.dist(v) && first.next == table.dir(v), [&] {
          return "rooted and neighbor-wise dist differ for " + f.label(v) + " at " +
                 turn_text(t);
        });
        if (first.next) {
          tally.expect(second.value == table.sec_dist(v) && second.next == table.sec_dir(v),
                       [&] {
                         return "rooted and neighbor-wise sec-dist differ for " +
                                f.label(v) + " at " + turn_text(t);
                       });
        }
        tally.expect(path_at(f, v, t, order) == table.path(v), [&] {
          return "rooted and neighbor-wise paths differ for " + f.label(v);
        });
      }
    } else {
      tally.skip("explicit rooting skipped for " + heavy_note);
    }
  }

  if (on("monotonicity")) {
    auto& tally = *tally_ptr("monotonicity");
    for (VertexId v : comp) {
      const auto i = v.dense();
      if (f.arrival(v) < t) {
        tally.expect(prev_dist[i] <= table.dist(v) && prev_sec[i] <= table.sec_dist(v),
                     [&] { return "distance of " + f.label(v) + " dropped at " + turn_text(t); });
      }
    }
  }
  for (VertexId v : comp) {
    prev_dist[v.dense()] = table.dist(v);
    prev_sec[v.dense()] = table.sec_dist(v);
  }

  if (on("level_lipschitz") || on("level_drop")) {
    Tally* both = on("level_lipschitz") ? tally_ptr("level_lipschitz") : nullptr;
    Tally* drop = on("level_drop") ? tally_ptr("level_drop") : nullptr;
    for (VertexId v : comp) {
      const Distance lv = level_from(f, table, v);
      for (auto u : {table.dir(v), table.sec_dir(v)}) {
        if (!u) continue;
        const Distance lu = level_from(f, table, *u);
        if (both) {
          both->expect(within_one(lv, lu), [&] {
            return "levels of " + f.label(v) + " (" + lv.to_string() + ") and " + f.label(*u) +
                   " (" + lu.to_string() + ") differ by more than 1 at " + turn_text(t);
          });
        }
        if (drop) {
          drop->expect(lv <= lu.next(), [&] {
            return "level drops by more than 1 from " + f.label(v) + " to " + f.label(*u) +
                   " at " + turn_text(t);
          });
        }
      }
    }
  }

  if (on("observation6")) {
    auto& tally = *tally_ptr("observation6");
    if (f.neighbors_view(b, t).size() == 1) {
      tally.expect(is_dead(f, table, b), [&] { return "pendant arrival alive at " + turn_text(t); });
    }
    for (VertexId v : comp) {
      const bool dead = is_dead(f, table, v);
      std::size_t alive_n = 0, dead_n = 0;
      for (VertexId u : f.neighbors_view(v, t)) (is_dead(f, table, u) ? dead_n : alive_n)++;
      if (f.is_black(v)) {
        tally.expect(dead == (alive_n <= 1), [&] {
          return "black " + f.label(v) + " dead/alive-neighbor mismatch at " + turn_text(t);
        });
      } else {
        tally.expect(dead == (dead_n >= 1), [&] {
          return "white " + f.label(v) + " dead/dead-neighbor mismatch at " + turn_text(t);
        });
      }
      tally.expect(dead == !life.alive(v, t), [&] {
        return "recorded lifetime of " + f.label(v) + " disagrees at " + turn_text(t);
      });
    }
  }

  if (on("dying_region")) {
    auto& tally = *tally_ptr("dying_region");
    const auto region = dying_region(f, life, t, rec.dist);
    tally.expect(region.vertices == rec.deaths, [&] {
      return "structural dying region differs from the recomputed deaths at " + turn_text(t);
    });
    if (rec.dist_finite()) {
      tally.expect(rec.alive_neighbors_prev >= 1,
                   [&] { return "finite dist with no alive neighbor at " + turn_text(t); });
      if (rec.alive_neighbors_prev >= 2) {
        tally.expect(rec.deaths.empty(),
                     [&] { return "deaths despite two alive neighbors at " + turn_text(t); });
      }
      if (rec.alive_neighbors_prev == 1) {
        // Up to the first vertex passing either test, the tests agree.
        for (VertexId v : rec.path.vertices) {
          if (!f.is_black(v)) continue;
          const bool portal = alive_neighbor_count(f, life, v, t, t - 1) >= 3;
          const bool keeps = alive_neighbor_count(f, life, v, t, t) >= 2;
          tally.expect(portal == keeps, [&] {
            return "portal test disagrees with alive-neighbor test on " + f.label(v) + " at " +
                   turn_text(t);
          });
          if (portal || keeps) break;
        }
      }
    }
    for (VertexId v : rec.deaths) {
      tally.expect(life.alive(v, t - 1),
                   [&] { return f.label(v) + " died twice at " + turn_text(t); });
    }
  }

  if (on("lemma7")) {
    auto& tally = *tally_ptr("lemma7");
    if (small) {
      auto all_alive = [&](const Path& p, std::size_t from) {
        for (std::size_t i = from; i < p.vertices.size(); ++i) {
          if (is_dead(f, table, p.vertices[i])) return false;
        }
        return true;
      };
      for (VertexId v : comp) {
        if (is_dead(f, table, v)) continue;
        tally.expect(all_alive(table.path(v), 0), [&] {
          return "game path of alive " + f.label(v) + " meets a dead vertex at " + turn_text(t);
        });
        for (VertexId p : f.neighbors_view(v, t)) {
          tally.expect(all_alive(table.det_path(p, v), 1), [&] {
            return "game path of alive " + f.label(v) + " below " + f.label(p) +
                   " meets a dead vertex at " + turn_text(t);
          });
        }
      }
    } else {
      tally.skip("skipped for " + heavy_note);
    }
  }

  if (on("prefix")) {
    auto& tally = *tally_ptr("prefix");
    if (rec.dist_finite()) {
      tally.expect(rec.split_consistent, [&] {
        return "dying vertices on the path are not an initial segment at " + turn_text(t);
      });
      tally.expect(rec.prefix_len + rec.suffix_len == rec.dist.value(),
                   [&] { return "prefix and suffix do not add up at " + turn_text(t); });
    }
  }

  if (on("sap_online")) {
    auto& tally = *tally_ptr("sap_online");
    if (rec.dist_finite()) {
      tally.expect(rec.pi_len && *rec.pi_len <= rec.dist.value(), [&] {
        return "applied path missing or longer than dist at " + turn_text(t);
      });
    } else {
      tally.expect(!rec.pi_len, [&] { return "augmenting path despite infinite dist at " + turn_text(t); });
    }
    if (small || t == f.turn()) {
      tally.expect(rec.matching_size == tree_max_matching(f, t).size(), [&] {
        return "online matching is not maximum after " + turn_text(t);
      });
    }
  }

  const bool oracle_fits = comp.size() <= opt.budget.max_component_size;
  const std::string budget_note = "component larger than the oracle budget of " +
                                  std::to_string(opt.budget.max_component_size);
  if (on("oracle_game")) {
    auto& tally = *tally_ptr("oracle_game");
    if (oracle_fits) {
      const Distance value = adversary_game_value(f, b, t, opt.budget);
      tally.expect(value == rec.dist, [&] {
        return "adversary value " + value.to_string() + " != dist " + rec.dist.to_string() +
               " at " + turn_text(t);
      });
    } else {
      tally.skip(budget_note);
    }
  }

  if (on("lemma3")) {
    auto& tally = *tally_ptr("lemma3");
    if (oracle_fits) {
      for (const auto& m : enumerate_component_max_matchings(f, b, t, b, opt.budget)) {
        const auto brute = brute_shortest_aug(f, m, b, t, opt.budget);
        const auto bfs = shortest_augmenting_path(f, m, b, t, order);
        tally.expect(brute.has_value() == bfs.has_value() &&
                         (!brute || *brute == bfs->length()),
                     [&] { return "search and enumeration disagree at " + turn_text(t); });
        if (rec.dist_finite()) {
          tally.expect(brute && *brute <= rec.dist.value(), [&] {
            return "a maximum matching has no augmenting path within dist at " + turn_text(t);
          });
        }
      }
    } else {
      tally.skip(budget_note);
    }
  }

  if (on("hall")) {
    auto& tally = *tally_ptr("hall");
    std::size_t blacks = 0;
    for (VertexId v : comp) blacks += f.is_black(v);
    const auto witness = hall_witness(f, b, t, order);
    tally.expect(witness.has_value() == rec.dist.is_infinite(),
                 [&] { return "witness presence disagrees with dist at " + turn_text(t); });
    if (blacks <= opt.budget.max_subset_size) {
      const auto brute = brute_hall(f, b, t, opt.budget);
      tally.expect(brute.has_value() == rec.dist.is_infinite(),
                   [&] { return "subset search disagrees with dist at " + turn_text(t); });
      if (witness) {
        tally.expect(is_minimal_deficient(f, witness->blacks, t, opt.budget),
                     [&] { return "witness is not a minimal deficient set at " + turn_text(t); });
        tally.expect(std::binary_search(witness->blacks.begin(), witness->blacks.end(), b),
                     [&] { return "witness misses the arrival at " + turn_text(t); });
      }
    } else {
      tally.skip("component has more black vertices than the subset budget of " +
                 std::to_string(opt.budget.max_subset_size));
    }
  }

  if (on("run_agreement")) {
    auto& tally = *tally_ptr("run_agreement");
    if (small) {
      const auto d = dist_dir(f, b, t, order);
      const auto s = sec_dist_dir(f, b, t, order);
      tally.expect(d.value == rec.dist && s.value == rec.sec_dist &&
                       path_at(f, b, t, order) == rec.path,
                   [&] { return "recorded quantities differ from a fresh evaluation at " + turn_text(t); });
    } else {
      tally.skip("skipped for " + heavy_note);
    }
  }
}

void Suite::per_run(const ScenarioTrace& trace) {
  const double beta = opt.beta;
  if (on("prefix")) {
    auto& tally = *tally_ptr("prefix");
    tally.expect(trace.resurrections == 0,
                 [&] { return std::to_string(trace.resurrections) + " dead vertices came back"; });
  }
  if (on("aggregate")) {
    auto& tally = *tally_ptr("aggregate");
    const auto agg = aggregate_bounds(trace, beta);
    tally.expect(agg.decomposition_ok(), [] { return std::string("dist sum does not split"); });
    tally.expect(agg.prefix_ok(), [&] {
      return "prefix sum " + std::to_string(agg.sum_prefix) + " above 2n";
    });
    tally.expect(agg.slow_ok(), [&] {
      return "slow suffix sum " + std::to_string(agg.sum_slow_suffix) + " above its budget";
    });
    tally.expect(agg.jump_ok(), [&] {
      return "jump suffix sum " + std::to_string(agg.sum_jump_suffix) + " above its budget";
    });
    tally.expect(agg.total_ok(), [&] {
      return "dist sum " + std::to_string(agg.sum_dist) + " above the total budget";
    });
  }
  if (on("lemma12")) {
    auto& tally = *tally_ptr("lemma12");
    bool degree_two = true;
    for (const auto& a : f.arrivals()) degree_two &= a.size() >= 2;
    if (degree_two) {
      const auto r = check_lemma12(trace);
      tally.expect(r.deaths == 0, [&] { return std::to_string(r.deaths) + " deaths"; });
      tally.expect(r.infinite_turns == 0, [] { return std::string("an infinite dist"); });
      tally.expect(r.bound_ok, [&] {
        return "path sum " + std::to_string(r.path_sum) + " above n log2 n for n = " +
               std::to_string(r.n);
      });
    } else {
      tally.skip("some arrival has fewer than two neighbors");
    }
  }
  if (on("slow_audit")) {
    auto& tally = *tally_ptr("slow_audit");
    const auto audit = audit_case_slow(trace, beta);
    for (const auto& a : audit.turns) {
      tally.expect(a.ok(), [&] {
        return turn_text(a.t) + ": " + (a.detail.empty() ? "slow-turn audit failed" : a.detail);
      });
    }
    tally.expect(audit.suffix_sum <= audit.budget,
                 [] { return std::string("slow suffix sum above its budget"); });
    tally.expect(audit.max_halving_charges <= audit.halving_bound, [&] {
      return "a vertex was charged " + std::to_string(audit.max_halving_charges) +
             " halvings";
    });
  }
  if (on("ledger") || on("utilization")) {
    const auto rep = run_token_ledger(trace, beta);
    if (on("ledger")) {
      auto& tally = *tally_ptr("ledger");
      std::size_t others = 0;
      const LedgerViolation* first = nullptr;
      for (const auto& v : rep.violations) {
        if (v.kind == "utilization") continue;
        if (!first) first = &v;
        ++others;
      }
      tally.expect(others == 0, [&] {
        return std::to_string(others) + " violations, first " + first->kind + " at " +
               turn_text(first->turn) + " level " + std::to_string(first->level) + ": " +
               first->detail;
      });
      tally.expect(rep.funded == rep.utilized + rep.retired + rep.held,
                   [] { return std::string("token conservation broken"); });
      tally.expect(rep.max_vertex_payment <= rep.payment_bound,
                   [] { return std::string("per-vertex payment above its bound"); });
    }
    if (on("utilization")) {
      auto& tally = *tally_ptr("utilization");
      for (const auto& jt : rep.jump_turns) {
        tally.expect(jt.utilized + kTokenTolerance * std::max(1.0, jt.required) >= jt.required, [&] {
          return turn_text(jt.t) + ": utilized " + std::to_string(jt.utilized) +
                 " below required " + std::to_string(jt.required) + " (level " +
                 std::to_string(jt.high) + ")";
        });
      }
    }
  }
}

std::vector<CheckResult> run_suite(const OnlineForest& f, const VerifyOptions& opt,
                                   TieBreak order) {
  Suite suite{f, opt, order, {}, {}, {}};
  for (const auto& name : check_names()) {
    if (wanted(opt, name)) suite.tallies.emplace_back(name);
  }
  suite.prev_dist.assign(f.vertex_count(), Distance(0));
  suite.prev_sec.assign(f.vertex_count(), Distance(0));
  auto trace = trace_scenario(
      f, order,
      [&](const ScenarioTrace& tr, TurnIndex t, const MiniMaxTable& table,
          std::span<const VertexId> comp) { suite.per_turn(tr, t, table, comp); });
  suite.per_run(trace);
  std::vector<CheckResult> out;
  for (auto& t : suite.tallies) out.push_back(t.finish());
  return out;
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skipped: return "SKIP";
  }
  return "?";
}

bool VerifyReport::ok() const {
  return std::none_of(results.begin(), results.end(),
                      [](const CheckResult& r) { return r.status == CheckStatus::fail; });
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "identities",  "monotonicity", "level_lipschitz", "level_drop", "observation6", "dying_region",
      "lemma7",      "prefix",       "sap_online",      "oracle_game",  "lemma3",
      "hall",        "run_agreement", "aggregate",      "lemma12",      "slow_audit",
      "ledger",      "utilization"};
  return names;
}

VerifyReport verify_instance(const OnlineForest& forest, const VerifyOptions& options) {
  for (const auto& c : options.checks) {
    if (std::find(check_names().begin(), check_names().end(), c) == check_names().end()) {
      throw Error(ErrorCode::invalid_argument, "unknown check '" + c + "'");
    }
  }
  ChargeParams params(options.beta);
  VerifyReport report;
  report.results = run_suite(forest, options, options.order);
  if (options.alt_tiebreak) {
    const bool fwd = options.order == TieBreak::forward;
    for (auto r : run_suite(forest, options, fwd ? TieBreak::reversed : TieBreak::forward)) {
      r.name += fwd ? "[reversed]" : "[forward]";
      report.results.push_back(std::move(r));
    }
  }
  return report;
}

CheckResult check_table_identities(const OnlineForest& forest, TurnIndex t,
                                   const MiniMaxTable& table) {
  Tally tally("identities");
  std::vector<VertexId> all;
  for (std::uint32_t v = 0; v < forest.vertex_count(t); ++v) all.emplace_back(v);
  table_identities(forest, table, all, t, tally);
  return tally.finish();
}

}  // namespace saptree
