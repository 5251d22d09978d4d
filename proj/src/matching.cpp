#include "saptree/matching.hpp"

#include <algorithm>

#include "saptree/error.hpp"

namespace saptree {

std::optional<VertexId> Matching::partner(VertexId v) const {
  if (is_free(v)) return std::nullopt;
  return VertexId(partner_[v.dense()]);
}

void Matching::match(VertexId a, VertexId b) {
  if (a == b || !is_free(a) || !is_free(b)) {
    throw Error(ErrorCode::invalid_matching,
                "cannot match vertices " + std::to_string(a.dense()) + " and " +
                    std::to_string(b.dense()));
  }
  resize(std::max(a.dense(), b.dense()) + std::size_t{1});
  partner_[a.dense()] = b.dense();
  partner_[b.dense()] = a.dense();
  ++size_;
}

void Matching::unmatch(VertexId v) {
  if (is_free(v)) return;
  const auto p = partner_[v.dense()];
  partner_[v.dense()] = kFree;
  partner_[p] = kFree;
  --size_;
}

std::vector<Edge> Matching::pairs() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (std::uint32_t v = 0; v < partner_.size(); ++v) {
    if (partner_[v] != kFree && v < partner_[v]) {
      out.emplace_back(VertexId(v), VertexId(partner_[v]));
    }
  }
  return out;
}

void Matching::validate(const OnlineForest& forest, TurnIndex t) const {
  for (const auto& [a, b] : pairs()) {
    if (!forest.has_edge(a, b, t)) {
      throw Error(ErrorCode::invalid_matching,
                  forest.contains(a) && forest.contains(b)
                      ? forest.label(a) + forest.label(b) +
                            " is matched but is not an edge at turn " +
                            std::to_string(t)
                      : std::string("matched vertex outside the forest"));
    }
  }
}

bool is_augmenting_path(const Matching& matching, const Path& path) {
  const auto& p = path.vertices;
  if (p.size() < 2 || p.size() % 2 != 0) return false;
  if (!matching.is_free(p.front()) || !matching.is_free(p.back())) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const bool matched = matching.partner(p[i]) == p[i + 1];
    if (matched != (i % 2 == 1)) return false;
  }
  std::vector<VertexId> sorted(p);
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::optional<Path> shortest_augmenting_path(const OnlineForest& forest,
                                             const Matching& matching,
                                             VertexId b, TurnIndex t,
                                             TieBreak order) {
  forest.require_exists(b, t);
  if (!forest.is_black(b) || !matching.is_free(b)) {
    throw Error(ErrorCode::not_free,
                forest.label(b) + " is not a free black vertex");
  }
  constexpr std::uint32_t kUnseen = UINT32_MAX;
  std::vector<std::uint32_t> parent(forest.vertex_count(t), kUnseen);
  std::vector<VertexId> queue{b};
  parent[b.dense()] = b.dense();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    auto nbrs = forest.neighbors_view(x, t);
    auto visit = [&](VertexId w) -> bool {
      if (parent[w.dense()] != kUnseen) return false;
      parent[w.dense()] = x.dense();
      auto mate = matching.partner(w);
      if (!mate) return true;
      parent[mate->dense()] = w.dense();
      queue.push_back(*mate);
      return false;
    };
    std::optional<VertexId> found;
    if (order == TieBreak::forward) {
      for (VertexId w : nbrs) {
        if (visit(w)) { found = w; break; }
      }
    } else {
      for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) {
        if (visit(*it)) { found = *it; break; }
      }
    }
    if (found) {
      Path p;
      for (std::uint32_t v = found->dense(); v != b.dense(); v = parent[v]) {
        p.vertices.push_back(VertexId(v));
      }
      p.vertices.push_back(b);
      std::reverse(p.vertices.begin(), p.vertices.end());
      return p;
    }
  }
  return std::nullopt;
}

Matching augment(Matching matching, const Path& path) {
  if (!is_augmenting_path(matching, path)) {
    throw Error(ErrorCode::invalid_path, "path is not augmenting");
  }
  const auto& p = path.vertices;
  for (std::size_t i = 1; i + 1 < p.size(); i += 2) matching.unmatch(p[i]);
  for (std::size_t i = 0; i + 1 < p.size(); i += 2) matching.match(p[i], p[i + 1]);
  return matching;
}

Matching tree_max_matching(const OnlineForest& forest, TurnIndex t) {
  const auto n = forest.vertex_count(t);
  Matching m(n);
  std::vector<char> seen(n, 0);
  for (std::uint32_t r = 0; r < n; ++r) {
    if (seen[r]) continue;
    auto view = forest.rooted_view(VertexId(r), t);
    const auto& vs = view.vertices();
    for (VertexId v : vs) seen[v.dense()] = 1;
    for (std::size_t i = vs.size(); i-- > 1;) {
      const VertexId v = vs[i];
      const VertexId p = *view.parent(v);
      if (m.is_free(v) && m.is_free(p)) m.match(v, p);
    }
  }
  return m;
}

std::vector<SapTurn> run_sap_online(const OnlineForest& scenario,
                                    TieBreak order) {
  OnlineForest forest(scenario.white_count());
  MiniMaxTable table(order);
  Matching m(scenario.vertex_count());
  std::vector<SapTurn> out;
  out.reserve(scenario.turn());
  for (const auto& arrival : scenario.arrivals()) {
    const TurnIndex t = forest.add_black_indices(arrival);
    const VertexId b = forest.black(t);
    table.update_component(forest, t, b);
    SapTurn rec;
    rec.t = t;
    rec.dist = table.dist(b);
    if (auto p = shortest_augmenting_path(forest, m, b, t, order)) {
      rec.pi_len = p->length();
      m = augment(std::move(m), *p);
    }
    rec.matching_size = m.size();
    out.push_back(rec);
  }
  return out;
}

}  // namespace saptree
