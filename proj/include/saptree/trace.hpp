#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "saptree/distance.hpp"
#include "saptree/forest.hpp"
#include "saptree/matching.hpp"
#include "saptree/minimax.hpp"
#include "saptree/vitality.hpp"

namespace saptree {

/// Piecewise-constant level of every vertex over the turns of a scenario.
class LevelHistory {
 public:
  struct Change {
    TurnIndex turn;
    Distance level;
  };

  void reset(std::size_t vertex_count) { changes_.assign(vertex_count, {}); }
  std::size_t size() const { return changes_.size(); }

  /// Appends a change if `level` differs from the current value.
  void record(VertexId v, TurnIndex t, Distance level);

  /// level_t(v); zero before the first recorded change.
  Distance at(VertexId v, TurnIndex t) const;
  Distance final_level(VertexId v) const;
  std::span<const Change> changes(VertexId v) const { return changes_[v.dense()]; }

 private:
  std::vector<std::vector<Change>> changes_;
};

/// Everything recorded about one arrival.
struct TurnRecord {
  TurnIndex t = 0;
  VertexId b;
  Distance dist;
  Distance sec_dist;
  Path path;  // path_t(b_t)

  std::optional<std::size_t> pi_len;  // applied augmenting path, if any
  std::size_t matching_size = 0;

  std::uint32_t alive_neighbors_prev = 0;  // |N_t(b_t) ∩ A_{t-1}|
  std::vector<VertexId> deaths;            // sorted

  std::optional<VertexId> dispatch;
  std::size_t prefix_vertices = 0;
  std::size_t prefix_len = 0;
  std::size_t suffix_len = 0;
  /// The dying vertices on the path are exactly an initial segment ending
  /// right before the dispatching vertex.
  bool split_consistent = true;

  Distance dispatch_level_prev;  // level_{t-1} of the dispatching vertex
  Distance dispatch_level;       // level_t of the dispatching vertex
  std::optional<VertexId> dispatch_dir;
  std::optional<VertexId> dispatch_sec_dir;

  bool dist_finite() const { return dist.is_finite(); }
};

struct ScenarioTrace {
  const OnlineForest* forest = nullptr;  // the full scenario
  TieBreak order = TieBreak::forward;
  std::vector<TurnRecord> turns;
  Lifetimes lifetimes;
  LevelHistory levels;
  /// Vertices that were dead before a turn and alive after it. Distances
  /// never decrease, so this stays zero.
  std::size_t resurrections = 0;

  /// Size parameter of the bounds: max(white count, arrivals).
  std::uint64_t n() const;
  const TurnRecord& turn(TurnIndex t) const { return turns.at(t - 1); }
};

/// Called after each turn with the table of F_t and the vertices of b_t's
/// component (the only ones whose values changed).
using TurnObserver =
    std::function<void(const ScenarioTrace&, TurnIndex, const MiniMaxTable&,
                       std::span<const VertexId>)>;

/// Replays the scenario turn by turn, running Shortest Augmenting Path and
/// recording distances, deaths, levels and the dispatch split.
ScenarioTrace trace_scenario(const OnlineForest& scenario,
                             TieBreak order = TieBreak::forward,
                             const TurnObserver& observer = {});

/// level_t(v) recomputed on demand: sec-dist for white vertices, dist for
/// arrived black ones, zero otherwise.
Distance level(const OnlineForest& forest, VertexId v, TurnIndex t,
               TieBreak order = TieBreak::forward);

/// level_{t-1/2}(v). Throws dispatch_undefined when turn t has no
/// dispatching vertex.
Distance level_half(const ScenarioTrace& trace, VertexId v, TurnIndex t);

}  // namespace saptree
