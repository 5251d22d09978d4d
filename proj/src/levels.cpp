#include "saptree/levels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "saptree/error.hpp"

namespace saptree {

namespace {

constexpr std::uint32_t kNone = UINT32_MAX;

bool at_least(double have, double need) {
  return have >= need - kTokenTolerance * std::max(1.0, std::abs(need));
}

std::uint64_t finite_or(Distance d, std::uint64_t fallback) {
  return d.is_finite() ? d.value() : fallback;
}

}  // namespace

const char* to_string(TurnClass c) {
  switch (c) {
    case TurnClass::dist_infinite: return "DIST_INFINITE";
    case TurnClass::no_dispatch: return "NO_DISPATCH";
    case TurnClass::case_slow: return "CASE_SLOW";
    case TurnClass::case_jump: return "CASE_JUMP";
  }
  return "?";
}

ChargeParams::ChargeParams(double b) : beta(b) {
  if (!(b > 1.0) || !std::isfinite(b)) {
    throw Error(ErrorCode::invalid_argument,
                "beta must be a finite number greater than 1");
  }
}

bool ChargeParams::qualifies(std::uint64_t size, std::uint64_t l) const {
  // size >= rho * l  <=>  size * (beta + 1) >= (beta - 1) * l
  const long double lhs = static_cast<long double>(size) * (beta + 1.0L);
  const long double rhs = static_cast<long double>(l) * (beta - 1.0L);
  return lhs >= rhs;
}

TurnClass classify_turn(const TurnRecord& rec, double beta) {
  if (!rec.dist_finite()) return TurnClass::dist_infinite;
  if (!rec.dispatch) return TurnClass::no_dispatch;
  const long double high = rec.dispatch_level.value();
  const long double low = rec.dispatch_level_prev.value();
  return high >= static_cast<long double>(beta) * low ? TurnClass::case_jump
                                                      : TurnClass::case_slow;
}

TurnClass classify_turn(const ScenarioTrace& trace, TurnIndex t, double beta) {
  return classify_turn(trace.turn(t), beta);
}

Distance level_at(const ScenarioTrace& trace, VertexId v, LevelTime when) {
  if (when.half && when.t > 0) {
    const auto& rec = trace.turn(when.t);
    if (rec.dispatch && *rec.dispatch == v) {
      return trace.levels.at(v, when.t - 1);
    }
  }
  return trace.levels.at(v, when.t);
}

InducedGraph level_forest(const ScenarioTrace& trace, LevelTime when,
                          std::uint64_t l) {
  const auto& forest = *trace.forest;
  std::vector<VertexId> keep;
  for (std::uint32_t v = 0; v < forest.vertex_count(); ++v) {
    const Distance lv = level_at(trace, VertexId(v), when);
    if (lv.is_infinite() || lv.value() >= l) keep.push_back(VertexId(v));
  }
  return forest.induced_subforest(keep, forest.turn());
}

// ---------------------------------------------------------------------------

Budgets budgets(std::uint64_t n, double beta) {
  ChargeParams params(beta);
  const long double nn = static_cast<long double>(n);
  const long double lg = n > 0 ? std::log2(nn) : 0.0L;
  const long double ln = n > 0 ? std::log(nn) : 0.0L;
  const long double b = beta;
  Budgets out;
  out.prefix = 2.0L * nn;
  out.slow = 2.0L * b * nn + b * nn * lg;
  out.jump = b * (b + 1.0L) / ((b - 1.0L) * (b - 1.0L)) * nn * (2.0L * ln + 3.4L) + nn;
  return out;
}

AggregateReport aggregate_bounds(const ScenarioTrace& trace, double beta) {
  AggregateReport out;
  out.beta = beta;
  out.n = trace.n();
  out.budget = budgets(out.n, beta);
  for (const auto& rec : trace.turns) {
    if (rec.pi_len) out.sum_pi += *rec.pi_len;
    switch (classify_turn(rec, beta)) {
      case TurnClass::dist_infinite:
        ++out.infinite_turns;
        continue;
      case TurnClass::no_dispatch:
        ++out.no_dispatch_turns;
        break;
      case TurnClass::case_slow:
        ++out.slow_turns;
        out.sum_slow_suffix += rec.suffix_len;
        break;
      case TurnClass::case_jump:
        ++out.jump_turns;
        out.sum_jump_suffix += rec.suffix_len;
        break;
    }
    out.sum_dist += rec.dist.value();
    out.sum_prefix += rec.prefix_len;
  }
  return out;
}

// ---------------------------------------------------------------------------

bool within_n_log2_n(std::uint64_t s, std::uint64_t n) {
  if (n <= 1) return s == 0;
  // floor/ceil of log2 n bracket the answer cheaply.
  const std::uint64_t lo = 63 - static_cast<std::uint64_t>(__builtin_clzll(n));
  const std::uint64_t hi = (n & (n - 1)) == 0 ? lo : lo + 1;
  if (s <= n * lo) return true;
  if (s > n * hi) return false;
  using boost::multiprecision::cpp_int;
  const cpp_int lhs = cpp_int(1) << static_cast<unsigned>(s);
  const cpp_int rhs = boost::multiprecision::pow(cpp_int(n), static_cast<unsigned>(n));
  return lhs <= rhs;
}

Lemma12Report check_lemma12(const ScenarioTrace& trace) {
  const auto& forest = *trace.forest;
  for (TurnIndex t = 1; t <= forest.turn(); ++t) {
    if (forest.arrivals()[t - 1].size() < 2) {
      throw Error(ErrorCode::precondition,
                  "arrival " + std::to_string(t) + " has fewer than two neighbors");
    }
  }
  Lemma12Report out;
  out.n = forest.white_count();
  for (const auto& rec : trace.turns) {
    out.deaths += rec.deaths.size();
    if (!rec.dist_finite()) {
      ++out.infinite_turns;
      continue;
    }
    out.path_sum += rec.path.length();
  }
  out.bound_ok = within_n_log2_n(out.path_sum, out.n);
  return out;
}

// ---------------------------------------------------------------------------

bool SlowAuditReport::ok() const {
  for (const auto& a : turns) {
    if (!a.ok()) return false;
  }
  return suffix_sum <= budget && max_halving_charges <= halving_bound;
}

SlowAuditReport audit_case_slow(const ScenarioTrace& trace, double beta) {
  const auto& forest = *trace.forest;
  const auto& life = trace.lifetimes;
  const std::uint32_t total = static_cast<std::uint32_t>(forest.vertex_count());
  const TurnIndex last = forest.turn();

  SlowAuditReport out;
  out.budget = budgets(trace.n(), beta).slow;
  out.halving_bound = std::log2(2.0L * static_cast<long double>(trace.n()));

  std::vector<std::uint32_t> charges(total, 0);
  std::vector<std::uint32_t> label(total, kNone);
  std::vector<std::uint32_t> stamp(total, kNone);
  std::vector<std::uint32_t> in_deaths(total, kNone);
  std::vector<VertexId> queue;

  for (TurnIndex t = 1; t <= last; ++t) {
    const auto& rec = trace.turn(t);
    if (classify_turn(rec, beta) != TurnClass::case_slow) continue;
    const VertexId pivot = *rec.dispatch;
    SlowTurnAudit a;
    a.t = t;
    a.suffix_len = rec.suffix_len;
    a.dist_prev = rec.dispatch_level_prev;
    a.inequality = rec.dispatch_level_prev.is_finite() &&
                   static_cast<long double>(rec.suffix_len) <
                       static_cast<long double>(beta) * rec.dispatch_level_prev.value();
    a.dispatch_not_arrival = pivot != rec.b;
    out.suffix_sum += rec.suffix_len;

    // Component of the pivot among vertices alive at t-1 (final forest,
    // unarrived vertices count as alive).
    queue.assign(1, pivot);
    stamp[pivot.dense()] = t;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (VertexId u : forest.adjacency(queue[head])) {
        if (stamp[u.dense()] == t || !life.alive(u, t - 1)) continue;
        stamp[u.dense()] = t;
        queue.push_back(u);
      }
    }
    const std::vector<VertexId> whole = queue;

    // The dying set must be connected and inside that component.
    a.deaths_connected = !rec.deaths.empty();
    for (VertexId d : rec.deaths) {
      in_deaths[d.dense()] = t;
      if (stamp[d.dense()] != t) a.deaths_connected = false;
    }
    if (a.deaths_connected) {
      std::size_t reached = 1;
      queue.assign(1, rec.deaths.front());
      label[rec.deaths.front().dense()] = kNone - 1;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (VertexId u : forest.adjacency(queue[head])) {
          if (in_deaths[u.dense()] != t || label[u.dense()] == kNone - 1) continue;
          label[u.dense()] = kNone - 1;
          queue.push_back(u);
          ++reached;
        }
      }
      a.deaths_connected = reached == rec.deaths.size();
    }

    // Surviving parts of the component.
    for (VertexId v : whole) {
      if (in_deaths[v.dense()] != t) label[v.dense()] = kNone;
    }
    std::vector<std::size_t> part_size;
    for (VertexId v : whole) {
      if (in_deaths[v.dense()] == t || label[v.dense()] != kNone) continue;
      const auto id = static_cast<std::uint32_t>(part_size.size());
      queue.assign(1, v);
      label[v.dense()] = id;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (VertexId u : forest.adjacency(queue[head])) {
          if (stamp[u.dense()] != t || in_deaths[u.dense()] == t ||
              label[u.dense()] != kNone) {
            continue;
          }
          label[u.dense()] = id;
          queue.push_back(u);
        }
      }
      part_size.push_back(queue.size());
    }

    const auto& path = rec.path.vertices;
    const std::uint32_t part =
        stamp[pivot.dense()] == t && in_deaths[pivot.dense()] != t
            ? label[pivot.dense()]
            : kNone;
    a.suffix_in_one_part = part != kNone;
    for (std::size_t i = rec.prefix_vertices; i < path.size(); ++i) {
      const auto v = path[i].dense();
      if (stamp[v] != t || in_deaths[v] == t || label[v] != part) {
        a.suffix_in_one_part = false;
      }
    }

    if (a.suffix_in_one_part) {
      const std::size_t largest =
          *std::max_element(part_size.begin(), part_size.end());
      if (part_size[part] < largest) {
        a.charged_to_small_part = true;
        if (rec.suffix_len + 1 > part_size[part]) {
          a.side_path_ok = false;
          a.detail = "suffix longer than its part";
        }
        for (VertexId v : whole) {
          if (in_deaths[v.dense()] != t && label[v.dense()] == part) {
            out.max_halving_charges =
                std::max(out.max_halving_charges, ++charges[v.dense()]);
          }
        }
      } else if (rec.prefix_vertices == 0) {
        a.side_path_ok = false;
        a.detail = "no predecessor of the dispatching vertex";
      } else {
        // Charge along the game path entering the predecessor from the
        // dispatching vertex, one turn earlier.
        const VertexId wp = path[rec.prefix_vertices - 1];
        const auto side = det_dist_dir(forest, pivot, wp, t - 1, trace.order);
        const auto wp_dist = dist_dir(forest, wp, t - 1, trace.order).value;
        const Path side_path = det_path(forest, pivot, wp, t - 1, trace.order);
        if (!(rec.dispatch_level_prev <= side.value.next())) {
          a.side_path_ok = false;
          a.detail = "dispatcher distance exceeds side value + 1";
        }
        if (!(side.value <= wp_dist) || wp_dist.is_infinite()) {
          a.side_path_ok = false;
          a.detail = "side value not bounded by a finite distance";
        }
        if (side.value.is_finite() && side_path.length() != side.value.value() + 1) {
          a.side_path_ok = false;
          a.detail = "side path length differs from its value";
        }
        for (std::size_t i = 1; i < side_path.vertices.size(); ++i) {
          const VertexId v = side_path.vertices[i];
          ++out.side_path_charges;
          if (!life.alive(v, t - 1)) {
            a.side_path_ok = false;
            a.detail = "side path leaves the alive set";
          } else if (in_deaths[v.dense()] != t && label[v.dense()] == part) {
            a.side_path_ok = false;
            a.detail = "side path enters the largest part";
          }
        }
      }
    }
    out.turns.push_back(std::move(a));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

/// Union-find with an additive tag per set, used to count how often each
/// vertex paid on the current level without touching every member.
class TaggedSets {
 public:
  void resize(std::size_t n) {
    parent_.resize(n);
    size_.resize(n);
    tag_.resize(n);
    funded_.resize(n);
  }

  void make(std::uint32_t v) {
    parent_[v] = v;
    size_[v] = 1;
    tag_[v] = 0;
    funded_[v] = 0;
  }

  std::uint32_t find(std::uint32_t x) {
    path_.clear();
    while (parent_[x] != x) {
      path_.push_back(x);
      x = parent_[x];
    }
    const std::uint32_t root = x;
    for (std::size_t i = path_.size(); i-- > 0;) {
      const std::uint32_t node = path_[i];
      const std::uint32_t p = parent_[node];
      if (p != root) {
        tag_[node] += tag_[p];
        parent_[node] = root;
      }
    }
    return root;
  }

  /// Total tag of x (its own offset plus its root's).
  std::int64_t value(std::uint32_t x) {
    const std::uint32_t r = find(x);
    return r == x ? tag_[x] : tag_[x] + tag_[r];
  }

  std::uint32_t unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    tag_[b] -= tag_[a];
    size_[a] += size_[b];
    return a;
  }

  std::uint32_t size(std::uint32_t root) const { return size_[root]; }
  bool funded(std::uint32_t root) const { return funded_[root] != 0; }
  void set_funded(std::uint32_t root, bool f) { funded_[root] = f ? 1 : 0; }
  void add_tag(std::uint32_t root, std::int64_t d) { tag_[root] += d; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::vector<std::int64_t> tag_;
  std::vector<char> funded_;
  std::vector<std::uint32_t> path_;
};

struct Part {
  std::uint32_t root;
  std::uint32_t size;
  bool funded;
};

struct Merged {
  std::uint32_t root;
  std::uint32_t funded_parts;
};

}  // namespace

LedgerReport run_token_ledger(const ScenarioTrace& trace, double beta,
                              bool strict) {
  const ChargeParams params(beta);
  const auto& forest = *trace.forest;
  const TurnIndex turns = forest.turn();
  const auto total = static_cast<std::uint32_t>(forest.vertex_count());

  LedgerReport out;
  out.beta = beta;
  out.rho = params.rho();
  out.delta = params.delta();
  out.n = trace.n();
  out.payment_bound =
      out.delta / out.rho * (std::log(2.0 * static_cast<double>(out.n)) + 1.0);
  const std::uint64_t top_level = 2 * out.n;

  auto violate = [&](std::string kind, TurnIndex t, std::uint64_t l,
                     std::string detail) {
    if (strict) {
      throw Error(ErrorCode::ledger_infeasible,
                  kind + " at turn " + std::to_string(t) + ", level " +
                      std::to_string(l) + ": " + detail);
    }
    out.violations.push_back({std::move(kind), t, l, std::move(detail)});
  };

  // Turn metadata.
  std::vector<std::uint32_t> pivot(turns + 1, kNone);
  std::vector<std::uint32_t> jump_slot(turns + 1, kNone);
  for (TurnIndex t = 1; t <= turns; ++t) {
    const auto& rec = trace.turn(t);
    if (rec.dispatch) pivot[t] = rec.dispatch->dense();
    if (classify_turn(rec, beta) != TurnClass::case_jump) continue;
    JumpTurnLedger j;
    j.t = t;
    j.low = rec.dispatch_level_prev.value();
    j.high = rec.dispatch_level.value();
    const std::uint64_t l0 = j.low + 1;
    const std::uint64_t l1 = (j.low + j.high) / 2;
    j.claim_levels = l1 >= l0 ? l1 - l0 + 1 : 0;
    j.required = out.delta * (1.0 - 1.0 / beta) / 2.0 * static_cast<double>(j.high);
    jump_slot[t] = static_cast<std::uint32_t>(out.jump_turns.size());
    out.jump_turns.push_back(j);
  }

  // Level changes on the half-turn clock: the dispatching vertex moves at
  // step 2t, every other change of turn t at step 2t - 1.
  struct Step {
    std::uint32_t step;
    std::uint64_t level;  // UINT64_MAX for infinity
  };
  std::vector<std::vector<Step>> steps(total);
  std::vector<std::uint64_t> final_level(total, 0);
  for (std::uint32_t v = 0; v < total; ++v) {
    for (const auto& c : trace.levels.changes(VertexId(v))) {
      const std::uint32_t s = pivot[c.turn] == v ? 2 * c.turn : 2 * c.turn - 1;
      steps[v].push_back({s, finite_or(c.level, UINT64_MAX)});
    }
    if (!steps[v].empty()) final_level[v] = steps[v].back().level;
  }
  std::vector<std::uint32_t> by_level(total);
  for (std::uint32_t v = 0; v < total; ++v) by_level[v] = v;
  std::stable_sort(by_level.begin(), by_level.end(), [&](auto a, auto b) {
    return final_level[a] > final_level[b];
  });

  TaggedSets sets;
  sets.resize(total);
  std::vector<std::uint32_t> cursor(total, 0);
  std::vector<std::uint32_t> entry(total, 0);
  std::vector<std::uint64_t> active_on(total, 0);  // level + 1 when active
  std::vector<std::uint64_t> mark(total, 0);
  std::vector<std::uint32_t> merged_slot(total, 0);
  std::vector<double> paid(total, 0.0);
  std::vector<std::uint32_t> bucket(2 * static_cast<std::size_t>(turns) + 2, 0);
  std::vector<std::uint32_t> order;
  std::vector<Part> parts;
  std::vector<Merged> merged;
  std::uint64_t group_id = 0;

  std::size_t active = total;
  for (std::uint64_t l = 1; l <= top_level; ++l) {
    while (active > 0 && final_level[by_level[active - 1]] < l) --active;
    if (active == 0) break;
    out.levels = l;

    // Entry step of every active vertex on this level, bucketed by step.
    std::fill(bucket.begin(), bucket.end(), 0);
    for (std::size_t i = 0; i < active; ++i) {
      const std::uint32_t v = by_level[i];
      auto& c = cursor[v];
      while (steps[v][c].level < l) ++c;
      entry[v] = steps[v][c].step;
      ++bucket[entry[v] + 1];
    }
    for (std::size_t s = 1; s < bucket.size(); ++s) bucket[s] += bucket[s - 1];
    order.resize(active);
    for (std::size_t i = 0; i < active; ++i) {
      const std::uint32_t v = by_level[i];
      order[bucket[entry[v]]++] = v;
    }

    std::uint64_t funded_here = 0;
    std::uint64_t utilized_here = 0;
    std::uint64_t retired_here = 0;

    for (std::size_t i = 0; i < active;) {
      std::size_t j = i;
      const std::uint32_t step = entry[order[i]];
      while (j < active && entry[order[j]] == step) ++j;
      const TurnIndex t = (step + 1) / 2;
      const bool second_half = step % 2 == 0;
      const bool jump_phase = second_half && jump_slot[t] != kNone;
      ++group_id;

      if (second_half && (j - i != 1 || order[i] != pivot[t])) {
        violate("schedule", t, l, "unexpected vertices in the dispatcher phase");
      }

      if (jump_phase) {
        auto& jt = out.jump_turns[jump_slot[t]];
        const std::uint64_t l0 = jt.low + 1;
        const std::uint64_t l1 = (jt.low + jt.high) / 2;
        if (l >= l0 && l <= l1) {
          ++out.claim_checks;
          const auto& rec = trace.turn(t);
          bool ok = rec.dispatch_dir && rec.dispatch_sec_dir;
          if (ok) {
            const auto a = rec.dispatch_dir->dense();
            const auto b = rec.dispatch_sec_dir->dense();
            ok = active_on[a] == l + 1 && active_on[b] == l + 1;
            if (ok) {
              const auto ra = sets.find(a);
              const auto rb = sets.find(b);
              ok = ra != rb && params.qualifies(sets.size(ra), l) &&
                   params.qualifies(sets.size(rb), l);
            }
          }
          if (!ok) {
            violate("claim19", t, l,
                    "direction neighbors not in two separate large parts");
          }
        }
      }

      parts.clear();
      for (std::size_t k = i; k < j; ++k) {
        const std::uint32_t v = order[k];
        active_on[v] = l + 1;
        sets.make(v);
        mark[v] = group_id;
        parts.push_back({v, 1, false});
      }
      for (std::size_t k = i; k < j; ++k) {
        for (VertexId u : forest.adjacency(VertexId(order[k]))) {
          if (active_on[u.dense()] != l + 1) continue;
          const std::uint32_t r = sets.find(u.dense());
          if (mark[r] == group_id) continue;
          mark[r] = group_id;
          parts.push_back({r, sets.size(r), sets.funded(r)});
        }
      }
      for (std::size_t k = i; k < j; ++k) {
        for (VertexId u : forest.adjacency(VertexId(order[k]))) {
          if (active_on[u.dense()] == l + 1) sets.unite(order[k], u.dense());
        }
      }

      merged.clear();
      ++group_id;
      for (const Part& p : parts) {
        const std::uint32_t r = sets.find(p.root);
        if (mark[r] != group_id) {
          mark[r] = group_id;
          merged_slot[r] = static_cast<std::uint32_t>(merged.size());
          merged.push_back({r, 0});
        }
        if (p.funded) ++merged[merged_slot[r]].funded_parts;
        if (p.funded && !params.qualifies(p.size, l)) {
          violate("funding", t, l, "funded part below the size threshold");
        }
      }

      for (const Merged& m : merged) {
        const std::uint32_t size = sets.size(m.root);
        if (jump_phase && m.funded_parts >= 2) {
          // Two funded parts meet at the dispatcher: one is used up, one
          // carries over.
          ++utilized_here;
          ++out.transfers;
          retired_here += m.funded_parts - 2;
          auto& jt = out.jump_turns[jump_slot[t]];
          ++jt.merge_levels;
          jt.utilized += out.delta;
          sets.set_funded(m.root, true);
        } else if (m.funded_parts >= 1) {
          ++out.transfers;
          retired_here += m.funded_parts - 1;
          sets.set_funded(m.root, true);
        } else if (params.qualifies(size, l)) {
          ++funded_here;
          sets.add_tag(m.root, 1);
          out.total_payment += static_cast<double>(size) * out.delta /
                               (out.rho * static_cast<double>(l));
          sets.set_funded(m.root, true);
        } else {
          sets.set_funded(m.root, false);
        }
        if (sets.funded(m.root) != params.qualifies(size, l)) {
          violate("funding", t, l, "part funding disagrees with its size");
        }
      }
      i = j;
    }

    std::uint64_t held_here = 0;
    for (std::size_t k = 0; k < active; ++k) {
      const std::uint32_t v = order[k];
      if (sets.find(v) == v && sets.funded(v)) ++held_here;
      const std::int64_t times = sets.value(v);
      if (times > 1) {
        violate("payment_once", 0, l,
                "vertex " + forest.label(VertexId(v)) + " paid " +
                    std::to_string(times) + " times");
      }
      paid[v] += static_cast<double>(times) * out.delta /
                 (out.rho * static_cast<double>(l));
    }
    if (funded_here != utilized_here + retired_here + held_here) {
      violate("conservation", 0, l, "funded tokens are not accounted for");
    }
    out.funded += funded_here;
    out.utilized += utilized_here;
    out.retired += retired_here;
    out.held += held_here;
  }

  for (std::uint32_t v = 0; v < total; ++v) {
    out.max_vertex_payment = std::max(out.max_vertex_payment, paid[v]);
  }
  if (!at_least(out.payment_bound, out.max_vertex_payment)) {
    violate("payment_total", 0, 0, "a vertex paid more than the harmonic bound");
  }
  for (const auto& jt : out.jump_turns) {
    if (!at_least(jt.utilized, jt.required)) {
      ++out.utilization_shortfalls;
      violate("utilization", jt.t, 0,
              "utilized " + std::to_string(jt.utilized) + " < required " +
                  std::to_string(jt.required));
    }
    if (!at_least(jt.utilized, out.delta * static_cast<double>(jt.claim_levels))) {
      ++out.guarantee_shortfalls;
      violate("guarantee", jt.t, 0,
              "fewer merges than the two-part range guarantees");
    }
  }
  return out;
}

bool Claim19Report::ok() const {
  return std::all_of(levels.begin(), levels.end(),
                     [](const Claim19Level& c) { return c.ok; });
}

Claim19Report check_claim19(const ScenarioTrace& trace, TurnIndex t,
                            double beta) {
  const ChargeParams params(beta);
  if (t == 0 || t > trace.turns.size() ||
      classify_turn(trace, t, beta) != TurnClass::case_jump) {
    throw Error(ErrorCode::invalid_argument,
                "turn " + std::to_string(t) + " is not a jump turn");
  }
  const auto& forest = *trace.forest;
  const auto& rec = trace.turn(t);
  Claim19Report out;
  out.t = t;
  out.l0 = rec.dispatch_level_prev.value() + 1;
  out.l1 = (rec.dispatch_level_prev.value() + rec.dispatch_level.value()) / 2;
  const LevelTime when{t, true};

  auto in_level = [&](VertexId v, std::uint64_t l) {
    const Distance lv = level_at(trace, v, when);
    return lv.is_infinite() || lv.value() >= l;
  };
  auto component = [&](VertexId start, std::uint64_t l) {
    std::vector<VertexId> seen{start};
    std::vector<char> mark(forest.vertex_count(), 0);
    mark[start.dense()] = 1;
    for (std::size_t head = 0; head < seen.size(); ++head) {
      for (VertexId u : forest.adjacency(seen[head])) {
        if (mark[u.dense()] || !in_level(u, l)) continue;
        mark[u.dense()] = 1;
        seen.push_back(u);
      }
    }
    return std::make_pair(seen.size(), std::move(mark));
  };

  for (std::uint64_t l = out.l0; l <= out.l1; ++l) {
    Claim19Level c;
    c.level = l;
    if (rec.dispatch_dir && rec.dispatch_sec_dir &&
        in_level(*rec.dispatch_dir, l) && in_level(*rec.dispatch_sec_dir, l)) {
      auto [s1, mark1] = component(*rec.dispatch_dir, l);
      auto [s2, mark2] = component(*rec.dispatch_sec_dir, l);
      c.first_size = s1;
      c.second_size = s2;
      c.separate = !mark1[rec.dispatch_sec_dir->dense()];
      c.ok = c.separate && params.qualifies(s1, l) && params.qualifies(s2, l);
    }
    out.levels.push_back(c);
  }
  return out;
}

}  // namespace saptree
