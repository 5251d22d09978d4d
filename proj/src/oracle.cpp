#include "saptree/oracle.hpp"

#include <algorithm>
#include <bit>

#include "saptree/error.hpp"

namespace saptree {

namespace {

void require_black(const OnlineForest& forest, VertexId b, TurnIndex t) {
  forest.require_exists(b, t);
  if (!forest.is_black(b)) {
    throw Error(ErrorCode::invalid_argument, forest.label(b) + " is not a black vertex");
  }
}

std::vector<VertexId> bounded_component(const OnlineForest& forest, VertexId root,
                                        TurnIndex t, std::size_t limit,
                                        const char* what) {
  auto comp = forest.component(root, t);
  if (comp.size() > limit) {
    throw Error(ErrorCode::budget_exceeded,
                std::string(what) + ": component of " + forest.label(root) + " has " +
                    std::to_string(comp.size()) + " vertices, budget " +
                    std::to_string(limit));
  }
  return comp;
}

struct Enumerator {
  const OnlineForest& forest;
  TurnIndex t;
  std::vector<VertexId> order;  // component, ascending
  std::optional<VertexId> banned;
  Matching current;
  std::size_t best = 0;
  std::vector<Matching> found;

  void run(std::size_t i) {
    // Upper bound: every remaining vertex could still pair up.
    if (current.size() + (order.size() - i) / 2 < best) return;
    if (i == order.size()) {
      if (current.size() > best) {
        best = current.size();
        found.clear();
      }
      if (current.size() == best) found.push_back(current);
      return;
    }
    const VertexId v = order[i];
    if (!current.is_free(v) || (banned && *banned == v)) {
      run(i + 1);
      return;
    }
    run(i + 1);  // v stays unmatched
    for (VertexId u : forest.neighbors_view(v, t)) {
      if (u < v || !current.is_free(u) || (banned && *banned == u)) continue;
      current.match(v, u);
      run(i + 1);
      current.unmatch(v);
    }
  }
};

}  // namespace

std::vector<Matching> enumerate_component_max_matchings(
    const OnlineForest& forest, VertexId root, TurnIndex t,
    std::optional<VertexId> must_free, const OracleBudget& budget) {
  forest.require_exists(root, t);
  Enumerator e{forest, t,
               bounded_component(forest, root, t, budget.max_component_size,
                                 "matching enumeration"),
               must_free, Matching(forest.vertex_count(t))};
  std::sort(e.order.begin(), e.order.end());
  e.run(0);
  return std::move(e.found);
}

std::vector<Matching> enumerate_max_matchings(const OnlineForest& forest,
                                              TurnIndex t,
                                              std::optional<VertexId> must_free,
                                              const OracleBudget& budget) {
  std::vector<Matching> acc{Matching(forest.vertex_count(t))};
  std::vector<char> seen(forest.vertex_count(t), 0);
  for (std::uint32_t v = 0; v < forest.vertex_count(t); ++v) {
    if (seen[v]) continue;
    for (VertexId u : forest.component(VertexId(v), t)) seen[u.dense()] = 1;
    auto part = enumerate_component_max_matchings(forest, VertexId(v), t, must_free, budget);
    std::vector<Matching> next;
    next.reserve(acc.size() * part.size());
    for (const auto& a : acc) {
      for (const auto& p : part) {
        Matching m = a;
        for (auto [x, y] : p.pairs()) m.match(x, y);
        next.push_back(std::move(m));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

MatchingCount count_component_max_matchings(const OnlineForest& forest,
                                            VertexId root, TurnIndex t,
                                            std::optional<VertexId> must_free) {
  const auto view = forest.rooted_view(root, t);
  struct Cell {
    MatchingCount unmatched;         // v not matched to a child
    std::optional<MatchingCount> matched;  // v matched to a child
  };
  auto better = [](MatchingCount& acc, MatchingCount x) {
    if (x.size > acc.size) acc = x;
    else if (x.size == acc.size) acc.count += x.count;
  };
  auto best_of = [&](const Cell& c) {
    MatchingCount out = c.unmatched;
    if (c.matched) better(out, *c.matched);
    return out;
  };
  std::vector<Cell> cell(forest.vertex_count(t));
  const auto& order = view.vertices();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    Cell c{{0, 1}, std::nullopt};
    for (VertexId ch : view.children(v)) {
      const auto b = best_of(cell[ch.dense()]);
      c.unmatched.size += b.size;
      c.unmatched.count *= b.count;
    }
    const bool banned_v = must_free && *must_free == v;
    if (!banned_v) {
      for (VertexId pick : view.children(v)) {
        if (must_free && *must_free == pick) continue;
        MatchingCount m{1, cell[pick.dense()].unmatched.count};
        m.size += cell[pick.dense()].unmatched.size;
        for (VertexId ch : view.children(v)) {
          if (ch == pick) continue;
          const auto b = best_of(cell[ch.dense()]);
          m.size += b.size;
          m.count *= b.count;
        }
        if (!c.matched) c.matched = m;
        else better(*c.matched, m);
      }
    }
    cell[v.dense()] = c;
  }
  return best_of(cell[root.dense()]);
}

std::optional<std::size_t> brute_shortest_aug(const OnlineForest& forest,
                                              const Matching& matching,
                                              VertexId b, TurnIndex t,
                                              const OracleBudget& budget) {
  require_black(forest, b, t);
  if (!matching.is_free(b)) {
    throw Error(ErrorCode::not_free, forest.label(b) + " is matched");
  }
  bounded_component(forest, b, t, budget.max_component_size, "path enumeration");
  std::optional<std::size_t> best;
  // Explicit stack of (vertex, came from, length).
  struct Frame {
    VertexId v;
    std::optional<VertexId> from;
    std::size_t len;
  };
  std::vector<Frame> stack{{b, std::nullopt, 0}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (forest.is_white(f.v)) {
      if (matching.is_free(f.v)) {
        if (!best || f.len < *best) best = f.len;
        continue;
      }
      const VertexId mate = *matching.partner(f.v);
      if (mate != f.from) stack.push_back({mate, f.v, f.len + 1});
      continue;
    }
    const auto mate = matching.partner(f.v);
    for (VertexId u : forest.neighbors_view(f.v, t)) {
      if (u == f.from || (mate && *mate == u)) continue;
      stack.push_back({u, f.v, f.len + 1});
    }
  }
  return best;
}

Distance adversary_game_value(const OnlineForest& forest, VertexId b,
                              TurnIndex t, const OracleBudget& budget) {
  require_black(forest, b, t);
  const auto all = enumerate_component_max_matchings(forest, b, t, b, budget);
  Distance worst(0);
  for (const auto& m : all) {
    const auto len = brute_shortest_aug(forest, m, b, t, budget);
    if (!len) return Distance::infinity();
    worst = std::max(worst, Distance(static_cast<Distance::value_type>(*len)));
  }
  return worst;
}

bool is_deficient(const OnlineForest& forest, const std::vector<VertexId>& blacks,
                  TurnIndex t) {
  std::vector<VertexId> n;
  for (VertexId x : blacks) {
    auto view = forest.neighbors_view(x, t);
    n.insert(n.end(), view.begin(), view.end());
  }
  std::sort(n.begin(), n.end());
  n.erase(std::unique(n.begin(), n.end()), n.end());
  return n.size() < blacks.size();
}

namespace {

// Neighborhood sizes of every subset of `blacks`, as bitmasks over whites
// local to the component.
std::vector<std::uint32_t> neighborhood_sizes(const OnlineForest& forest,
                                              const std::vector<VertexId>& blacks,
                                              TurnIndex t) {
  std::vector<VertexId> whites;
  for (VertexId x : blacks) {
    auto view = forest.neighbors_view(x, t);
    whites.insert(whites.end(), view.begin(), view.end());
  }
  std::sort(whites.begin(), whites.end());
  whites.erase(std::unique(whites.begin(), whites.end()), whites.end());
  const std::size_t k = blacks.size();
  std::vector<std::vector<bool>> nb(k, std::vector<bool>(whites.size(), false));
  for (std::size_t i = 0; i < k; ++i) {
    for (VertexId w : forest.neighbors_view(blacks[i], t)) {
      nb[i][std::lower_bound(whites.begin(), whites.end(), w) - whites.begin()] = true;
    }
  }
  std::vector<std::uint32_t> out(std::size_t{1} << k, 0);
  std::vector<bool> hit(whites.size());
  for (std::size_t mask = 1; mask < out.size(); ++mask) {
    std::fill(hit.begin(), hit.end(), false);
    std::uint32_t count = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask >> i & 1)) continue;
      for (std::size_t j = 0; j < whites.size(); ++j) {
        if (nb[i][j] && !hit[j]) {
          hit[j] = true;
          ++count;
        }
      }
    }
    out[mask] = count;
  }
  return out;
}

}  // namespace

bool is_minimal_deficient(const OnlineForest& forest,
                          const std::vector<VertexId>& blacks, TurnIndex t,
                          const OracleBudget& budget) {
  if (blacks.size() > budget.max_subset_size) {
    throw Error(ErrorCode::budget_exceeded,
                "subset of " + std::to_string(blacks.size()) + " black vertices exceeds budget");
  }
  if (blacks.empty()) return false;
  const auto sizes = neighborhood_sizes(forest, blacks, t);
  const std::size_t full = sizes.size() - 1;
  if (!(sizes[full] < blacks.size())) return false;
  for (std::size_t mask = 1; mask < full; ++mask) {
    if (sizes[mask] < static_cast<std::uint32_t>(std::popcount(mask))) return false;
  }
  return true;
}

std::optional<std::vector<VertexId>> brute_hall(const OnlineForest& forest,
                                                VertexId b, TurnIndex t,
                                                const OracleBudget& budget) {
  require_black(forest, b, t);
  // A minimal deficient set is connected through its neighborhood, so only
  // b's component matters.
  std::vector<VertexId> blacks;
  for (VertexId v : forest.component(b, t)) {
    if (forest.is_black(v)) blacks.push_back(v);
  }
  std::sort(blacks.begin(), blacks.end());
  if (blacks.size() > budget.max_subset_size) {
    throw Error(ErrorCode::budget_exceeded,
                "component of " + forest.label(b) + " has " +
                    std::to_string(blacks.size()) + " black vertices, budget " +
                    std::to_string(budget.max_subset_size));
  }
  const std::size_t k = blacks.size();
  const auto sizes = neighborhood_sizes(forest, blacks, t);
  std::vector<char> deficient(sizes.size(), 0);
  for (std::size_t mask = 1; mask < sizes.size(); ++mask) {
    deficient[mask] = sizes[mask] < static_cast<std::uint32_t>(std::popcount(mask));
  }
  // below[mask]: some nonempty subset of mask, mask included, is deficient.
  std::vector<char> below = deficient;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t mask = 0; mask < below.size(); ++mask) {
      if (mask >> i & 1) below[mask] |= below[mask ^ (std::size_t{1} << i)];
    }
  }
  const std::size_t bbit =
      std::size_t{1} << (std::lower_bound(blacks.begin(), blacks.end(), b) - blacks.begin());
  std::optional<std::size_t> pick;
  for (std::size_t mask = 1; mask < sizes.size(); ++mask) {
    if (!(mask & bbit) || !deficient[mask]) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < k && minimal; ++i) {
      if (mask >> i & 1) minimal = !below[mask ^ (std::size_t{1} << i)];
    }
    if (!minimal) continue;
    if (!pick || std::popcount(mask) < std::popcount(*pick)) pick = mask;
  }
  if (!pick) return std::nullopt;
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < k; ++i) {
    if (*pick >> i & 1) out.push_back(blacks[i]);
  }
  return out;
}

}  // namespace saptree
