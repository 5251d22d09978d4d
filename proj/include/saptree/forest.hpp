#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "saptree/disjoint_sets.hpp"

namespace saptree {

enum class Color : std::uint8_t { white, black };

using TurnIndex = std::uint32_t;

/// Dense vertex handle. White vertices occupy 0..n-1 and black vertices
/// follow in arrival order, so the natural ordering of handles is the global
/// tie-break order (whites ascending, then blacks by arrival).
class VertexId {
 public:
  constexpr VertexId() = default;
  constexpr explicit VertexId(std::uint32_t dense) : dense_(dense) {}

  constexpr std::uint32_t dense() const { return dense_; }

  friend constexpr auto operator<=>(VertexId, VertexId) = default;

 private:
  std::uint32_t dense_ = 0;
};

using Edge = std::pair<VertexId, VertexId>;

/// Plain subgraph: sorted vertex list and sorted edge list (first < second).
struct InducedGraph {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;

  bool operator==(const InducedGraph&) const = default;
};

class RootedView;

/// The growing forest F_t. White vertices are fixed at construction; each
/// arrival reveals one black vertex with all of its edges. Every prefix of
/// the arrival sequence is kept queryable, so turn-indexed queries never need
/// a copy of an earlier snapshot.
class OnlineForest {
 public:
  explicit OnlineForest(std::uint32_t white_count);

  std::uint32_t white_count() const { return white_count_; }
  TurnIndex turn() const { return static_cast<TurnIndex>(arrivals_.size()); }
  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t vertex_count(TurnIndex t) const { return white_count_ + t; }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t component_count() const { return component_count_; }

  /// 1-based white index.
  VertexId white(std::uint32_t index) const;
  /// Black vertex that arrived in turn t (1-based).
  VertexId black(TurnIndex t) const;

  Color color(VertexId v) const {
    return v.dense() < white_count_ ? Color::white : Color::black;
  }
  bool is_white(VertexId v) const { return v.dense() < white_count_; }
  bool is_black(VertexId v) const { return !is_white(v); }
  bool contains(VertexId v) const { return v.dense() < adj_.size(); }

  /// 1-based index within the vertex's color class.
  std::uint32_t label_index(VertexId v) const;
  /// "w3", "b2".
  std::string label(VertexId v) const;

  /// Arrival turn; 0 for white vertices.
  TurnIndex arrival(VertexId v) const;
  bool exists_at(VertexId v, TurnIndex t) const;

  /// Reveals b_{t+1}. Neighbors are white handles; they must be pairwise in
  /// distinct components. Returns the new turn index.
  TurnIndex add_black(std::span<const VertexId> neighbors);
  TurnIndex add_black(std::initializer_list<VertexId> neighbors);
  /// Same, with 1-based white indices.
  TurnIndex add_black_indices(std::span<const std::uint32_t> white_indices);

  /// Adjacency in the final (current) forest, sorted.
  std::span<const VertexId> adjacency(VertexId v) const;
  /// N_t(v) as a view into the adjacency; sorted.
  std::span<const VertexId> neighbors_view(VertexId v, TurnIndex t) const;
  std::vector<VertexId> neighbors_at(VertexId v, TurnIndex t) const;
  bool has_edge(VertexId a, VertexId b, TurnIndex t) const;

  /// Arrival log as 1-based white indices.
  const std::vector<std::vector<std::uint32_t>>& arrivals() const {
    return arrivals_;
  }

  std::vector<VertexId> component(VertexId v, TurnIndex t) const;
  RootedView rooted_view(VertexId root, TurnIndex t) const;
  /// Rooted view of root's component after deleting the edge {root, cut}.
  RootedView rooted_view_without(VertexId root, VertexId cut,
                                 TurnIndex t) const;
  InducedGraph induced_subforest(std::span<const VertexId> vertices,
                                 TurnIndex t) const;

  /// Throws not_arrived when v does not exist at turn t.
  void require_exists(VertexId v, TurnIndex t) const;

 private:
  RootedView build_view(VertexId root, TurnIndex t,
                        std::optional<VertexId> cut) const;

  std::uint32_t white_count_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::vector<std::uint32_t>> arrivals_;
  std::size_t edge_count_ = 0;
  std::size_t component_count_ = 0;
  DisjointSets components_;
};

/// BFS-rooted tree of one component at a fixed turn. Children are sorted by
/// the global vertex order.
class RootedView {
 public:
  VertexId root() const { return order_.front(); }
  /// Vertices in BFS order, root first.
  const std::vector<VertexId>& vertices() const { return order_; }
  std::size_t size() const { return order_.size(); }
  bool contains(VertexId v) const { return pos_.contains(v.dense()); }

  std::optional<VertexId> parent(VertexId v) const;
  std::span<const VertexId> children(VertexId v) const;
  Color color(VertexId v) const {
    return v.dense() < white_count_ ? Color::white : Color::black;
  }
  std::uint32_t white_count() const { return white_count_; }

 private:
  friend class OnlineForest;
  friend RootedView subtree(const RootedView& view, VertexId u);

  std::size_t position(VertexId v) const;

  std::uint32_t white_count_ = 0;
  std::vector<VertexId> order_;
  std::vector<std::uint32_t> parent_pos_;
  std::vector<std::vector<VertexId>> children_;
  std::unordered_map<std::uint32_t, std::uint32_t> pos_;
};

/// Rooted subtree of u with all of its descendants.
RootedView subtree(const RootedView& view, VertexId u);

}  // namespace saptree
