#include "saptree/vitality.hpp"

#include <algorithm>

#include "saptree/error.hpp"

namespace saptree {

namespace {

bool dead_from(const OnlineForest& forest, VertexId v, Distance dist,
               Distance sec) {
  return forest.is_black(v) ? sec.is_infinite() : dist.is_infinite();
}

}  // namespace

bool is_dead(const OnlineForest& forest, VertexId v, TurnIndex t,
             TieBreak order) {
  if (forest.is_black(v) && (!forest.contains(v) || forest.arrival(v) > t)) {
    return false;
  }
  forest.require_exists(v, t);
  if (forest.is_black(v)) {
    return sec_dist_dir(forest, v, t, order).value.is_infinite();
  }
  return dist_dir(forest, v, t, order).value.is_infinite();
}

bool is_dead(const OnlineForest& forest, const MiniMaxTable& table,
             VertexId v) {
  if (v.dense() >= table.size()) return false;
  return dead_from(forest, v, table.dist(v), table.sec_dist(v));
}

std::optional<HallWitness> hall_witness(const OnlineForest& forest, VertexId b,
                                        TurnIndex t, TieBreak order) {
  forest.require_exists(b, t);
  if (!forest.is_black(b)) {
    throw Error(ErrorCode::invalid_argument,
                forest.label(b) + " is not a black vertex");
  }
  auto view = forest.rooted_view(b, t);
  RootedGame game(view, order);
  if (game.revenue(b).value.is_finite()) return std::nullopt;

  HallWitness out;
  std::vector<VertexId> stack{b};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (forest.is_black(v)) {
      out.blacks.push_back(v);
      for (VertexId c : view.children(v)) stack.push_back(c);
    } else if (auto next = game.revenue(v).next) {
      stack.push_back(*next);
    }
  }
  std::sort(out.blacks.begin(), out.blacks.end());
  for (VertexId x : out.blacks) {
    auto n = forest.neighbors_view(x, t);
    out.neighborhood.insert(out.neighborhood.end(), n.begin(), n.end());
  }
  std::sort(out.neighborhood.begin(), out.neighborhood.end());
  out.neighborhood.erase(
      std::unique(out.neighborhood.begin(), out.neighborhood.end()),
      out.neighborhood.end());
  return out;
}

std::uint32_t alive_neighbor_count(const OnlineForest& forest,
                                   const Lifetimes& life, VertexId v,
                                   TurnIndex t, TurnIndex alive_at) {
  std::uint32_t count = 0;
  for (VertexId u : forest.neighbors_view(v, t)) {
    if (life.alive(u, alive_at)) ++count;
  }
  return count;
}

std::vector<VertexId> life_portals(const OnlineForest& forest,
                                   const Lifetimes& life, TurnIndex t) {
  std::vector<VertexId> out;
  if (t == 0) return out;
  for (TurnIndex s = 1; s <= t; ++s) {
    const VertexId b = forest.black(s);
    if (alive_neighbor_count(forest, life, b, t, t - 1) >= 3) out.push_back(b);
  }
  return out;
}

DyingRegion dying_region(const OnlineForest& forest, const Lifetimes& life,
                         TurnIndex t, Distance arrival_dist) {
  if (t == 0) {
    throw Error(ErrorCode::invalid_argument, "turn 0 has no arrival");
  }
  DyingRegion region;
  const VertexId b = forest.black(t);
  if (arrival_dist.is_infinite()) {
    region.structural = false;
    for (std::uint32_t v = 0; v < forest.vertex_count(t); ++v) {
      if (life.death_turn(VertexId(v)) == t) region.vertices.push_back(VertexId(v));
    }
    return region;
  }
  if (alive_neighbor_count(forest, life, b, t, t - 1) >= 2) return region;

  auto passable = [&](VertexId u) {
    if (!life.alive(u, t - 1)) return false;
    return forest.is_white(u) ||
           alive_neighbor_count(forest, life, u, t, t - 1) < 3;
  };
  std::vector<char> seen(forest.vertex_count(t), 0);
  std::vector<VertexId> queue{b};
  seen[b.dense()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (VertexId u : forest.neighbors_view(queue[head], t)) {
      if (seen[u.dense()] || !passable(u)) continue;
      seen[u.dense()] = 1;
      queue.push_back(u);
    }
  }
  std::sort(queue.begin(), queue.end());
  region.vertices = std::move(queue);
  return region;
}

std::optional<std::size_t> dispatch_index(const OnlineForest& forest,
                                          const Lifetimes& life,
                                          const Path& path, TurnIndex t) {
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    const VertexId v = path.vertices[i];
    if (forest.is_black(v) && alive_neighbor_count(forest, life, v, t, t) >= 2) {
      return i;
    }
  }
  return std::nullopt;
}

std::size_t PathSplit::prefix_len() const {
  if (prefix.empty()) return 0;
  return suffix.empty() ? prefix.length() : prefix.vertices.size();
}

PathSplit split_path(const Path& path, const Lifetimes& life, TurnIndex t) {
  PathSplit out;
  std::size_t i = 0;
  while (i < path.vertices.size() && life.death_turn(path.vertices[i]) == t) ++i;
  out.prefix.vertices.assign(path.vertices.begin(), path.vertices.begin() + i);
  out.suffix.vertices.assign(path.vertices.begin() + i, path.vertices.end());
  return out;
}

VitalityState compute_vitality(const OnlineForest& forest, TurnIndex t,
                               TieBreak order) {
  forest.require_exists(forest.white(1), t);
  VitalityState state;
  state.turn = t;
  const auto now = MiniMaxTable::compute(forest, t, order);
  Lifetimes life(forest.vertex_count(t));
  if (t > 0) {
    const auto before = MiniMaxTable::compute(forest, t - 1, order);
    for (std::uint32_t v = 0; v < forest.vertex_count(t - 1); ++v) {
      if (is_dead(forest, before, VertexId(v))) life.set_death(VertexId(v), t - 1);
    }
  }
  for (std::uint32_t v = 0; v < forest.vertex_count(t); ++v) {
    const VertexId id(v);
    if (!is_dead(forest, now, id)) {
      state.alive.push_back(id);
      continue;
    }
    state.dead.push_back(id);
    if (t > 0 && life.alive(id, t - 1)) {
      life.set_death(id, t);
      state.deaths.push_back(id);
    }
  }
  if (t == 0) return state;
  state.portals = life_portals(forest, life, t);
  const VertexId b = forest.black(t);
  if (now.dist(b).is_finite()) {
    const Path p = now.path(b);
    if (auto i = dispatch_index(forest, life, p, t)) state.dispatch = p.vertices[*i];
  }
  return state;
}

Lifetimes reference_lifetimes(const OnlineForest& forest, TurnIndex upto,
                              TieBreak order) {
  Lifetimes life(forest.vertex_count(upto));
  for (TurnIndex t = 0; t <= upto; ++t) {
    const auto table = MiniMaxTable::compute(forest, t, order);
    for (std::uint32_t v = 0; v < forest.vertex_count(t); ++v) {
      const VertexId id(v);
      if (life.death_turn(id) == Lifetimes::kNever && is_dead(forest, table, id)) {
        life.set_death(id, t);
      }
    }
  }
  return life;
}

}  // namespace saptree
