#include "saptree/trace.hpp"

#include <algorithm>

#include "saptree/error.hpp"

namespace saptree {

void LevelHistory::record(VertexId v, TurnIndex t, Distance level) {
  auto& list = changes_[v.dense()];
  const Distance current = list.empty() ? Distance(0) : list.back().level;
  if (level == current) return;
  if (!list.empty() && list.back().turn == t) {
    list.back().level = level;
  } else {
    list.push_back({t, level});
  }
}

Distance LevelHistory::at(VertexId v, TurnIndex t) const {
  const auto& list = changes_[v.dense()];
  auto it = std::upper_bound(list.begin(), list.end(), t,
                             [](TurnIndex x, const Change& c) { return x < c.turn; });
  return it == list.begin() ? Distance(0) : std::prev(it)->level;
}

Distance LevelHistory::final_level(VertexId v) const {
  const auto& list = changes_[v.dense()];
  return list.empty() ? Distance(0) : list.back().level;
}

std::uint64_t ScenarioTrace::n() const {
  return std::max<std::uint64_t>(forest->white_count(), forest->turn());
}

ScenarioTrace trace_scenario(const OnlineForest& scenario, TieBreak order,
                             const TurnObserver& observer) {
  ScenarioTrace trace;
  trace.forest = &scenario;
  trace.order = order;
  const auto total = scenario.vertex_count();
  trace.lifetimes = Lifetimes(total);
  trace.levels.reset(total);
  trace.turns.reserve(scenario.turn());

  MiniMaxTable table = MiniMaxTable::compute(scenario, 0, order);
  Matching matching(total);
  std::vector<Distance> prev_dist(total, Distance(0));

  for (TurnIndex t = 1; t <= scenario.turn(); ++t) {
    TurnRecord rec;
    rec.t = t;
    rec.b = scenario.black(t);
    const VertexId b = rec.b;
    rec.alive_neighbors_prev =
        alive_neighbor_count(scenario, trace.lifetimes, b, t, t - 1);

    const auto& comp = table.update_component(scenario, t, b);
    const std::vector<VertexId> component(comp.begin(), comp.end());

    for (VertexId v : component) {
      const bool was_alive = trace.lifetimes.alive(v, t - 1);
      const bool dead = is_dead(scenario, table, v);
      if (was_alive && dead) {
        trace.lifetimes.set_death(v, t);
        rec.deaths.push_back(v);
      } else if (!was_alive && !dead) {
        ++trace.resurrections;
      }
    }
    std::sort(rec.deaths.begin(), rec.deaths.end());

    rec.dist = table.dist(b);
    rec.sec_dist = table.sec_dist(b);
    rec.path = table.path(b);

    if (auto p = shortest_augmenting_path(scenario, matching, b, t, order)) {
      rec.pi_len = p->length();
      matching = augment(std::move(matching), *p);
    }
    rec.matching_size = matching.size();

    if (rec.dist_finite()) {
      const auto split = split_path(rec.path, trace.lifetimes, t);
      rec.prefix_vertices = split.prefix.vertices.size();
      rec.prefix_len = split.prefix_len();
      rec.suffix_len = split.suffix_len();
      const auto idx = dispatch_index(scenario, trace.lifetimes, rec.path, t);
      rec.split_consistent =
          idx ? *idx == rec.prefix_vertices
              : rec.prefix_vertices == rec.path.vertices.size();
      for (std::size_t i = rec.prefix_vertices; i < rec.path.vertices.size(); ++i) {
        if (trace.lifetimes.death_turn(rec.path.vertices[i]) == t) {
          rec.split_consistent = false;
        }
      }
      if (idx) {
        const VertexId d = rec.path.vertices[*idx];
        rec.dispatch = d;
        rec.dispatch_level_prev = d == b ? Distance(0) : prev_dist[d.dense()];
        rec.dispatch_level = table.dist(d);
        rec.dispatch_dir = table.dir(d);
        rec.dispatch_sec_dir = table.sec_dir(d);
      }
    }

    for (VertexId v : component) {
      const Distance lv =
          scenario.is_white(v) ? table.sec_dist(v) : table.dist(v);
      trace.levels.record(v, t, lv);
      prev_dist[v.dense()] = table.dist(v);
    }

    trace.turns.push_back(std::move(rec));
    if (observer) observer(trace, t, table, component);
  }
  return trace;
}

Distance level(const OnlineForest& forest, VertexId v, TurnIndex t,
               TieBreak order) {
  if (forest.is_black(v) && (!forest.contains(v) || forest.arrival(v) > t)) {
    return Distance(0);
  }
  if (forest.is_white(v)) return sec_dist_dir(forest, v, t, order).value;
  return dist_dir(forest, v, t, order).value;
}

Distance level_half(const ScenarioTrace& trace, VertexId v, TurnIndex t) {
  if (t == 0 || t > trace.turns.size()) {
    throw Error(ErrorCode::invalid_argument, "turn out of range");
  }
  const auto& rec = trace.turn(t);
  if (!rec.dispatch) {
    throw Error(ErrorCode::dispatch_undefined,
                "turn " + std::to_string(t) + " has no dispatching vertex");
  }
  return trace.levels.at(v, v == *rec.dispatch ? t - 1 : t);
}

}  // namespace saptree
