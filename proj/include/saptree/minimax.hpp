#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "saptree/distance.hpp"
#include "saptree/forest.hpp"

namespace saptree {

/// Tie-break order used whenever several children realize the same revenue.
/// `forward` is the handle order; `reversed` flips it and exists to witness
/// that the checked statements do not depend on the choice.
enum class TieBreak : std::uint8_t { forward, reversed };

constexpr bool precedes(VertexId a, VertexId b, TieBreak order) {
  return order == TieBreak::forward ? a < b : b < a;
}

/// Vertex sequence; length() counts edges.
struct Path {
  std::vector<VertexId> vertices;

  std::size_t length() const {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
  bool empty() const { return vertices.empty(); }
  bool operator==(const Path&) const = default;
};

std::string format_path(const OnlineForest& forest, const Path& path);

/// Game value of a vertex together with the child that realizes it.
struct Revenue {
  Distance value;
  std::optional<VertexId> next;

  bool operator==(const Revenue&) const = default;
};

/// Bottom-up evaluation of the mini-max game on one rooted tree: black
/// vertices take the minimum over their children plus one (infinity at a
/// leaf), white vertices the maximum plus one (zero at a leaf).
class RootedGame {
 public:
  explicit RootedGame(const RootedView& view,
                      TieBreak order = TieBreak::forward);

  Revenue revenue(VertexId v) const;
  Path path(VertexId v) const;

 private:
  const RootedView* view_;
  std::vector<Distance> value_;
  std::vector<std::uint32_t> next_;
  std::vector<std::uint32_t> pos_;  // dense -> position, UINT32_MAX if absent
};

Revenue mini_max_revenue(const RootedView& view, VertexId v,
                         TieBreak order = TieBreak::forward);
Path mini_max_path(const RootedView& view, VertexId v,
                   TieBreak order = TieBreak::forward);

// On-demand queries against F_t. These root the component explicitly and are
// meant for spot checks; bulk work goes through MiniMaxTable.

Revenue dist_dir(const OnlineForest& forest, VertexId v, TurnIndex t,
                 TieBreak order = TieBreak::forward);
Revenue sec_dist_dir(const OnlineForest& forest, VertexId v, TurnIndex t,
                     TieBreak order = TieBreak::forward);
/// Edge-determined distance: value of `to` when entered from `from`.
Revenue det_dist_dir(const OnlineForest& forest, VertexId from, VertexId to,
                     TurnIndex t, TieBreak order = TieBreak::forward);
Path det_path(const OnlineForest& forest, VertexId from, VertexId to,
              TurnIndex t, TieBreak order = TieBreak::forward);
Path path_at(const OnlineForest& forest, VertexId v, TurnIndex t,
             TieBreak order = TieBreak::forward);
/// Game path of v once the edge to dir_t(v) is deleted.
Path sec_path_at(const OnlineForest& forest, VertexId v, TurnIndex t,
                 TieBreak order = TieBreak::forward);

struct VertexMinimax {
  Distance dist;
  Distance sec_dist;
  std::optional<VertexId> dir;
  std::optional<VertexId> sec_dir;

  bool operator==(const VertexMinimax&) const = default;
};

/// Per-turn cache of dist/sec-dist/dir/sec-dir for every vertex and the
/// edge-determined distances of every directed edge, computed by rerooting
/// each component (one downward and one upward sweep).
///
/// The table can be grown turn by turn: after an arrival only the component
/// of the new black vertex changes, and update_component() recomputes exactly
/// that component.
class MiniMaxTable {
 public:
  explicit MiniMaxTable(TieBreak order = TieBreak::forward) : order_(order) {}

  static MiniMaxTable compute(const OnlineForest& forest, TurnIndex t,
                              TieBreak order = TieBreak::forward);

  /// Grows the table to turn t and recomputes the component of `root`.
  /// Returns the component's vertices in BFS order from `root`.
  const std::vector<VertexId>& update_component(const OnlineForest& forest,
                                                TurnIndex t, VertexId root);

  TurnIndex turn() const { return turn_; }
  TieBreak order() const { return order_; }
  std::size_t size() const { return slots_.size(); }

  VertexMinimax at(VertexId v) const;
  Distance dist(VertexId v) const { return slots_[v.dense()].dist; }
  Distance sec_dist(VertexId v) const { return slots_[v.dense()].sec; }
  std::optional<VertexId> dir(VertexId v) const;
  std::optional<VertexId> sec_dir(VertexId v) const;

  /// Throws not_an_edge unless {from, to} is an edge at this turn.
  Revenue det(VertexId from, VertexId to) const;

  Path path(VertexId v) const;
  Path sec_path(VertexId v) const;
  Path det_path(VertexId from, VertexId to) const;

  /// Negative-control hook: overwrite a vertex's cached sec-dist.
  void corrupt_sec_dist(VertexId v, Distance value) {
    slots_[v.dense()].sec = value;
  }

 private:
  struct Slot {
    Distance dist = Distance(0);
    Distance sec = Distance(0);
    std::uint32_t dir = kNone;
    std::uint32_t sec_dir = kNone;
    std::uint32_t parent = kNone;  // parent in the component's rerooting tree
    Distance down = Distance(0);   // det(parent -> v)
    std::uint32_t down_next = kNone;
    Distance up = Distance(0);  // det(v -> parent)
    std::uint32_t up_next = kNone;
  };

  static constexpr std::uint32_t kNone = UINT32_MAX;

  Path walk(VertexId first, VertexId second) const;

  TieBreak order_;
  TurnIndex turn_ = 0;
  std::uint32_t white_count_ = 0;
  std::vector<Slot> slots_;
  std::vector<VertexId> scratch_order_;
};

}  // namespace saptree
