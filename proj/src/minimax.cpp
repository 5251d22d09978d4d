#include "saptree/minimax.hpp"

#include <algorithm>
#include <unordered_map>

#include "saptree/error.hpp"

namespace saptree {

namespace {

constexpr std::uint32_t kNone = UINT32_MAX;

/// Leaf value of the game: a white vertex with nothing below it is a free
/// endpoint, a black one is a dead end.
Distance leaf_value(bool black) {
  return black ? Distance::infinity() : Distance(0);
}

/// Whether candidate (a, a_id) beats (b, b_id) for the player at a vertex of
/// the given color. Black minimizes, white maximizes.
bool better(Distance a, std::uint32_t a_id, Distance b, std::uint32_t b_id,
            bool black, TieBreak order) {
  if (a != b) return black ? a < b : a > b;
  return precedes(VertexId(a_id), VertexId(b_id), order);
}

struct Best {
  Distance value;
  std::uint32_t id = kNone;

  void offer(Distance v, std::uint32_t candidate, bool black, TieBreak order) {
    if (id == kNone || better(v, candidate, value, id, black, order)) {
      value = v;
      id = candidate;
    }
  }
};

struct TopTwo {
  Best first;
  Best second;

  void offer(Distance v, std::uint32_t candidate, bool black, TieBreak order) {
    if (first.id == kNone ||
        better(v, candidate, first.value, first.id, black, order)) {
      second = first;
      first = Best{v, candidate};
    } else if (second.id == kNone ||
               better(v, candidate, second.value, second.id, black, order)) {
      second = Best{v, candidate};
    }
  }

  const Best& excluding(std::uint32_t id) const {
    return first.id == id ? second : first;
  }
};

}  // namespace

std::string format_path(const OnlineForest& forest, const Path& path) {
  std::string out = "[";
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    if (i) out += ", ";
    out += forest.label(path.vertices[i]);
  }
  return out + "]";
}

RootedGame::RootedGame(const RootedView& view, TieBreak order) : view_(&view) {
  const auto& vs = view.vertices();
  std::uint32_t max_dense = 0;
  for (VertexId v : vs) max_dense = std::max(max_dense, v.dense());
  pos_.assign(static_cast<std::size_t>(max_dense) + 1, kNone);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    pos_[vs[i].dense()] = static_cast<std::uint32_t>(i);
  }
  value_.assign(vs.size(), Distance(0));
  next_.assign(vs.size(), kNone);
  for (std::size_t i = vs.size(); i-- > 0;) {
    const VertexId v = vs[i];
    const bool black = view.color(v) == Color::black;
    Best best;
    for (VertexId c : view.children(v)) {
      best.offer(value_[pos_[c.dense()]], c.dense(), black, order);
    }
    if (best.id == kNone) {
      value_[i] = leaf_value(black);
    } else {
      value_[i] = best.value.next();
      next_[i] = best.id;
    }
  }
}

Revenue RootedGame::revenue(VertexId v) const {
  if (v.dense() >= pos_.size() || pos_[v.dense()] == kNone) {
    throw Error(ErrorCode::not_in_component, "vertex is not in the view");
  }
  const auto i = pos_[v.dense()];
  Revenue r{value_[i], std::nullopt};
  if (next_[i] != kNone) r.next = VertexId(next_[i]);
  return r;
}

Path RootedGame::path(VertexId v) const {
  Path p;
  std::optional<VertexId> cur = v;
  while (cur) {
    p.vertices.push_back(*cur);
    cur = revenue(*cur).next;
  }
  return p;
}

Revenue mini_max_revenue(const RootedView& view, VertexId v, TieBreak order) {
  return RootedGame(subtree(view, v), order).revenue(v);
}

Path mini_max_path(const RootedView& view, VertexId v, TieBreak order) {
  return RootedGame(subtree(view, v), order).path(v);
}

Revenue dist_dir(const OnlineForest& forest, VertexId v, TurnIndex t,
                 TieBreak order) {
  auto view = forest.rooted_view(v, t);
  return RootedGame(view, order).revenue(v);
}

Revenue sec_dist_dir(const OnlineForest& forest, VertexId v, TurnIndex t,
                     TieBreak order) {
  auto first = dist_dir(forest, v, t, order);
  if (!first.next) {
    // Nothing to remove: S equals T.
    return first;
  }
  auto view = forest.rooted_view_without(v, *first.next, t);
  return RootedGame(view, order).revenue(v);
}

namespace {

/// Evaluates the edge-determined recursion for every directed edge leading
/// away from `from` through `to`. Returns value/next keyed by the entered
/// vertex (each vertex in that region is entered from a unique neighbor).
struct DirectedSweep {
  std::unordered_map<std::uint32_t, Distance> value;
  std::unordered_map<std::uint32_t, std::uint32_t> next;
};

DirectedSweep sweep_from(const OnlineForest& forest, VertexId from,
                         VertexId to, TurnIndex t, TieBreak order) {
  // Frames are directed edges (entry -> v); children are N_t(v) \ {entry}.
  struct Frame {
    std::uint32_t entry;
    std::uint32_t v;
  };
  std::vector<Frame> stack{{from.dense(), to.dense()}};
  std::vector<Frame> post;
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    post.push_back(f);
    for (VertexId u : forest.neighbors_view(VertexId(f.v), t)) {
      if (u.dense() != f.entry) stack.push_back({f.v, u.dense()});
    }
  }
  DirectedSweep out;
  for (std::size_t i = post.size(); i-- > 0;) {
    const Frame f = post[i];
    const bool black = forest.is_black(VertexId(f.v));
    Best best;
    for (VertexId u : forest.neighbors_view(VertexId(f.v), t)) {
      if (u.dense() == f.entry) continue;
      best.offer(out.value.at(u.dense()), u.dense(), black, order);
    }
    if (best.id == kNone) {
      out.value[f.v] = leaf_value(black);
    } else {
      out.value[f.v] = best.value.next();
      out.next[f.v] = best.id;
    }
  }
  return out;
}

void require_edge(const OnlineForest& forest, VertexId from, VertexId to,
                  TurnIndex t) {
  forest.require_exists(from, t);
  forest.require_exists(to, t);
  if (!forest.has_edge(from, to, t)) {
    throw Error(ErrorCode::not_an_edge, forest.label(from) + forest.label(to) +
                                            " is not an edge at turn " +
                                            std::to_string(t));
  }
}

}  // namespace

Revenue det_dist_dir(const OnlineForest& forest, VertexId from, VertexId to,
                     TurnIndex t, TieBreak order) {
  require_edge(forest, from, to, t);
  auto sweep = sweep_from(forest, from, to, t, order);
  Revenue r{sweep.value.at(to.dense()), std::nullopt};
  if (auto it = sweep.next.find(to.dense()); it != sweep.next.end()) {
    r.next = VertexId(it->second);
  }
  return r;
}

Path det_path(const OnlineForest& forest, VertexId from, VertexId to,
              TurnIndex t, TieBreak order) {
  require_edge(forest, from, to, t);
  auto sweep = sweep_from(forest, from, to, t, order);
  Path p{{from, to}};
  std::uint32_t cur = to.dense();
  for (auto it = sweep.next.find(cur); it != sweep.next.end();
       it = sweep.next.find(cur)) {
    cur = it->second;
    p.vertices.push_back(VertexId(cur));
  }
  return p;
}

Path path_at(const OnlineForest& forest, VertexId v, TurnIndex t,
             TieBreak order) {
  auto view = forest.rooted_view(v, t);
  return RootedGame(view, order).path(v);
}

Path sec_path_at(const OnlineForest& forest, VertexId v, TurnIndex t,
                 TieBreak order) {
  auto first = dist_dir(forest, v, t, order);
  if (!first.next) {
    throw Error(ErrorCode::dir_undefined,
                forest.label(v) + " has no neighbor at turn " +
                    std::to_string(t));
  }
  auto view = forest.rooted_view_without(v, *first.next, t);
  return RootedGame(view, order).path(v);
}

MiniMaxTable MiniMaxTable::compute(const OnlineForest& forest, TurnIndex t,
                                   TieBreak order) {
  MiniMaxTable table(order);
  const auto n = forest.vertex_count(t);
  std::vector<char> seen(n, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (seen[v]) continue;
    for (VertexId u : table.update_component(forest, t, VertexId(v))) {
      seen[u.dense()] = 1;
    }
  }
  table.turn_ = t;
  return table;
}

const std::vector<VertexId>& MiniMaxTable::update_component(
    const OnlineForest& forest, TurnIndex t, VertexId root) {
  forest.require_exists(root, t);
  white_count_ = forest.white_count();
  const auto n = forest.vertex_count(t);
  if (slots_.size() < n) slots_.resize(n);
  turn_ = std::max(turn_, t);

  auto& order = scratch_order_;
  order.clear();
  order.push_back(root);
  slots_[root.dense()].parent = kNone;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const VertexId v = order[head];
    const auto p = slots_[v.dense()].parent;
    for (VertexId u : forest.neighbors_view(v, t)) {
      if (u.dense() == p) continue;
      slots_[u.dense()].parent = v.dense();
      order.push_back(u);
    }
  }

  // Downward values: det(parent -> v), i.e. the revenue of v when the tree
  // is rooted at `root`.
  for (std::size_t i = order.size(); i-- > 0;) {
    const VertexId v = order[i];
    Slot& s = slots_[v.dense()];
    const bool black = v.dense() >= white_count_;
    Best best;
    for (VertexId u : forest.neighbors_view(v, t)) {
      if (u.dense() == s.parent) continue;
      best.offer(slots_[u.dense()].down, u.dense(), black, order_);
    }
    s.down = best.id == kNone ? leaf_value(black) : best.value.next();
    s.down_next = best.id;
  }

  // Upward sweep: every neighbor's entry value is now known for v, giving
  // dist/sec-dist of v and det(c -> v) for each child c.
  for (VertexId v : order) {
    Slot& s = slots_[v.dense()];
    const bool black = v.dense() >= white_count_;
    TopTwo top;
    for (VertexId u : forest.neighbors_view(v, t)) {
      const Distance entry =
          u.dense() == s.parent ? s.up : slots_[u.dense()].down;
      top.offer(entry, u.dense(), black, order_);
    }
    s.dir = top.first.id;
    s.dist = top.first.id == kNone ? leaf_value(black) : top.first.value.next();
    s.sec_dir = top.second.id;
    s.sec = top.second.id == kNone ? leaf_value(black)
                                   : top.second.value.next();
    for (VertexId u : forest.neighbors_view(v, t)) {
      if (u.dense() == s.parent) continue;
      const Best& rest = top.excluding(u.dense());
      Slot& c = slots_[u.dense()];
      c.up = rest.id == kNone ? leaf_value(black) : rest.value.next();
      c.up_next = rest.id;
    }
  }
  return order;
}

VertexMinimax MiniMaxTable::at(VertexId v) const {
  return {dist(v), sec_dist(v), dir(v), sec_dir(v)};
}

std::optional<VertexId> MiniMaxTable::dir(VertexId v) const {
  auto d = slots_[v.dense()].dir;
  if (d == kNone) return std::nullopt;
  return VertexId(d);
}

std::optional<VertexId> MiniMaxTable::sec_dir(VertexId v) const {
  auto d = slots_[v.dense()].sec_dir;
  if (d == kNone) return std::nullopt;
  return VertexId(d);
}

Revenue MiniMaxTable::det(VertexId from, VertexId to) const {
  if (from.dense() >= slots_.size() || to.dense() >= slots_.size()) {
    throw Error(ErrorCode::not_an_edge, "endpoint outside the table");
  }
  const Slot& a = slots_[from.dense()];
  const Slot& b = slots_[to.dense()];
  Revenue r;
  std::uint32_t next;
  if (b.parent == from.dense()) {
    r.value = b.down;
    next = b.down_next;
  } else if (a.parent == to.dense()) {
    r.value = a.up;
    next = a.up_next;
  } else {
    throw Error(ErrorCode::not_an_edge, "not an edge of the table's forest");
  }
  if (next != kNone) r.next = VertexId(next);
  return r;
}

Path MiniMaxTable::walk(VertexId first, VertexId second) const {
  Path p{{first, second}};
  VertexId prev = first;
  VertexId cur = second;
  while (auto nxt = det(prev, cur).next) {
    p.vertices.push_back(*nxt);
    prev = cur;
    cur = *nxt;
  }
  return p;
}

Path MiniMaxTable::path(VertexId v) const {
  if (auto d = dir(v)) return walk(v, *d);
  return Path{{v}};
}

Path MiniMaxTable::sec_path(VertexId v) const {
  if (auto d = sec_dir(v)) return walk(v, *d);
  return Path{{v}};
}

Path MiniMaxTable::det_path(VertexId from, VertexId to) const {
  (void)det(from, to);
  return walk(from, to);
}

}  // namespace saptree
