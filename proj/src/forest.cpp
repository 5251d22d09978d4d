#include "saptree/forest.hpp"

#include <algorithm>
#include <deque>

#include "saptree/error.hpp"

namespace saptree {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::empty_neighbors: return "empty-neighbor-list";
    case ErrorCode::unknown_vertex: return "unknown-white-id";
    case ErrorCode::cycle: return "cycle-would-form";
    case ErrorCode::not_arrived: return "vertex-not-yet-arrived";
    case ErrorCode::not_an_edge: return "not-an-edge";
    case ErrorCode::not_in_component: return "vertex-not-in-component";
    case ErrorCode::dir_undefined: return "dir-undefined";
    case ErrorCode::dist_infinite: return "dist-infinite";
    case ErrorCode::dispatch_undefined: return "dispatch-undefined";
    case ErrorCode::not_free: return "b-not-free";
    case ErrorCode::invalid_matching: return "invalid-matching";
    case ErrorCode::invalid_path: return "invalid-path";
    case ErrorCode::budget_exceeded: return "budget-exceeded";
    case ErrorCode::infeasible_family: return "infeasible-family";
    case ErrorCode::parse: return "parse-error";
    case ErrorCode::precondition: return "precondition-violated";
    case ErrorCode::ledger_infeasible: return "ledger-infeasible";
    case ErrorCode::claim_violated: return "claim-violated";
    case ErrorCode::audit_failure: return "audit-failure";
  }
  return "unknown";
}

ParseError::ParseError(std::size_t line, std::size_t field,
                       const std::string& what)
    : Error(ErrorCode::parse, "line " + std::to_string(line) + ", field " +
                                  std::to_string(field) + ": " + what),
      line_(line),
      field_(field) {}

OnlineForest::OnlineForest(std::uint32_t white_count)
    : white_count_(white_count) {
  if (white_count == 0) {
    throw Error(ErrorCode::invalid_argument,
                "a scenario needs at least one white vertex");
  }
  adj_.resize(white_count);
  components_.reset(white_count);
  component_count_ = white_count;
}

VertexId OnlineForest::white(std::uint32_t index) const {
  if (index == 0 || index > white_count_) {
    throw Error(ErrorCode::unknown_vertex,
                "no white vertex w" + std::to_string(index));
  }
  return VertexId(index - 1);
}

VertexId OnlineForest::black(TurnIndex t) const {
  if (t == 0 || t > turn()) {
    throw Error(ErrorCode::not_arrived,
                "black vertex b" + std::to_string(t) + " has not arrived");
  }
  return VertexId(white_count_ + t - 1);
}

std::uint32_t OnlineForest::label_index(VertexId v) const {
  return is_white(v) ? v.dense() + 1 : v.dense() - white_count_ + 1;
}

std::string OnlineForest::label(VertexId v) const {
  return (is_white(v) ? "w" : "b") + std::to_string(label_index(v));
}

TurnIndex OnlineForest::arrival(VertexId v) const {
  return is_white(v) ? 0 : v.dense() - white_count_ + 1;
}

bool OnlineForest::exists_at(VertexId v, TurnIndex t) const {
  return contains(v) && arrival(v) <= t && t <= turn();
}

void OnlineForest::require_exists(VertexId v, TurnIndex t) const {
  if (t > turn()) {
    throw Error(ErrorCode::not_arrived,
                "turn " + std::to_string(t) + " is in the future");
  }
  if (!contains(v) || arrival(v) > t) {
    throw Error(ErrorCode::not_arrived,
                "vertex " + std::to_string(v.dense()) +
                    " does not exist at turn " + std::to_string(t));
  }
}

TurnIndex OnlineForest::add_black(std::span<const VertexId> neighbors) {
  if (neighbors.empty()) {
    throw Error(ErrorCode::empty_neighbors,
                "a black vertex must arrive with at least one edge");
  }
  std::vector<VertexId> sorted(neighbors.begin(), neighbors.end());
  std::sort(sorted.begin(), sorted.end());
  for (VertexId w : sorted) {
    if (!is_white(w)) {
      throw Error(ErrorCode::unknown_vertex,
                  "neighbor " + std::to_string(w.dense()) +
                      " is not a white vertex");
    }
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (components_.find(sorted[i].dense()) ==
          components_.find(sorted[j].dense())) {
        throw Error(ErrorCode::cycle,
                    "arrival would close a cycle through " +
                        label(sorted[i]) + " and " + label(sorted[j]));
      }
    }
  }

  const VertexId b(static_cast<std::uint32_t>(adj_.size()));
  components_.add();
  ++component_count_;
  adj_.emplace_back(sorted);
  std::vector<std::uint32_t> log;
  log.reserve(sorted.size());
  for (VertexId w : sorted) {
    adj_[w.dense()].push_back(b);
    components_.unite(w.dense(), b.dense());
    --component_count_;
    log.push_back(w.dense() + 1);
  }
  edge_count_ += sorted.size();
  arrivals_.push_back(std::move(log));
  return turn();
}

TurnIndex OnlineForest::add_black(std::initializer_list<VertexId> neighbors) {
  return add_black(std::span<const VertexId>(neighbors.begin(), neighbors.size()));
}

TurnIndex OnlineForest::add_black_indices(
    std::span<const std::uint32_t> white_indices) {
  std::vector<VertexId> ids;
  ids.reserve(white_indices.size());
  for (std::uint32_t i : white_indices) ids.push_back(white(i));
  return add_black(ids);
}

std::span<const VertexId> OnlineForest::adjacency(VertexId v) const {
  return adj_.at(v.dense());
}

std::span<const VertexId> OnlineForest::neighbors_view(VertexId v,
                                                       TurnIndex t) const {
  require_exists(v, t);
  const auto& list = adj_[v.dense()];
  if (is_black(v)) return list;
  // White adjacency is appended in arrival order, hence sorted by handle.
  const VertexId limit(white_count_ + t);
  auto end = std::lower_bound(list.begin(), list.end(), limit);
  return {list.data(), static_cast<std::size_t>(end - list.begin())};
}

std::vector<VertexId> OnlineForest::neighbors_at(VertexId v,
                                                 TurnIndex t) const {
  auto view = neighbors_view(v, t);
  return {view.begin(), view.end()};
}

bool OnlineForest::has_edge(VertexId a, VertexId b, TurnIndex t) const {
  if (!exists_at(a, t) || !exists_at(b, t)) return false;
  auto n = neighbors_view(a, t);
  return std::binary_search(n.begin(), n.end(), b);
}

std::vector<VertexId> OnlineForest::component(VertexId v, TurnIndex t) const {
  return rooted_view(v, t).vertices();
}

RootedView OnlineForest::rooted_view(VertexId root, TurnIndex t) const {
  require_exists(root, t);
  return build_view(root, t, std::nullopt);
}

RootedView OnlineForest::rooted_view_without(VertexId root, VertexId cut,
                                             TurnIndex t) const {
  require_exists(root, t);
  if (!has_edge(root, cut, t)) {
    throw Error(ErrorCode::not_an_edge, "cut edge is not present");
  }
  return build_view(root, t, cut);
}

InducedGraph OnlineForest::induced_subforest(
    std::span<const VertexId> vertices, TurnIndex t) const {
  InducedGraph g;
  g.vertices.assign(vertices.begin(), vertices.end());
  std::sort(g.vertices.begin(), g.vertices.end());
  g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()),
                   g.vertices.end());
  for (VertexId v : g.vertices) require_exists(v, t);
  for (VertexId v : g.vertices) {
    for (VertexId u : neighbors_view(v, t)) {
      if (v < u && std::binary_search(g.vertices.begin(), g.vertices.end(), u)) {
        g.edges.emplace_back(v, u);
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::optional<VertexId> RootedView::parent(VertexId v) const {
  auto p = parent_pos_[position(v)];
  if (p == UINT32_MAX) return std::nullopt;
  return order_[p];
}

std::span<const VertexId> RootedView::children(VertexId v) const {
  return children_[position(v)];
}

std::size_t RootedView::position(VertexId v) const {
  auto it = pos_.find(v.dense());
  if (it == pos_.end()) {
    throw Error(ErrorCode::not_in_component,
                "vertex " + std::to_string(v.dense()) + " is not in the view");
  }
  return it->second;
}

RootedView OnlineForest::build_view(VertexId root, TurnIndex t,
                                    std::optional<VertexId> cut) const {
  RootedView view;
  view.white_count_ = white_count_;
  view.order_.push_back(root);
  view.parent_pos_.push_back(UINT32_MAX);
  view.pos_.emplace(root.dense(), 0);
  for (std::size_t head = 0; head < view.order_.size(); ++head) {
    const VertexId v = view.order_[head];
    for (VertexId u : neighbors_view(v, t)) {
      if (head == 0 && cut && u == *cut) continue;
      if (view.pos_.contains(u.dense())) continue;
      view.pos_.emplace(u.dense(), static_cast<std::uint32_t>(view.order_.size()));
      view.order_.push_back(u);
      view.parent_pos_.push_back(static_cast<std::uint32_t>(head));
    }
  }
  view.children_.resize(view.order_.size());
  for (std::size_t i = 1; i < view.order_.size(); ++i) {
    view.children_[view.parent_pos_[i]].push_back(view.order_[i]);
  }
  // Neighbor lists are sorted, so children already follow the global order.
  return view;
}

RootedView subtree(const RootedView& view, VertexId u) {
  RootedView sub;
  sub.white_count_ = view.white_count_;
  sub.order_.push_back(u);
  sub.parent_pos_.push_back(UINT32_MAX);
  sub.pos_.emplace(u.dense(), 0);
  for (std::size_t head = 0; head < sub.order_.size(); ++head) {
    for (VertexId c : view.children(sub.order_[head])) {
      sub.pos_.emplace(c.dense(), static_cast<std::uint32_t>(sub.order_.size()));
      sub.order_.push_back(c);
      sub.parent_pos_.push_back(static_cast<std::uint32_t>(head));
    }
  }
  sub.children_.resize(sub.order_.size());
  for (std::size_t i = 1; i < sub.order_.size(); ++i) {
    sub.children_[sub.parent_pos_[i]].push_back(sub.order_[i]);
  }
  return sub;
}

}  // namespace saptree
