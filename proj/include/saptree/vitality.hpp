#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "saptree/distance.hpp"
#include "saptree/forest.hpp"
#include "saptree/minimax.hpp"

namespace saptree {

/// Turn of death for every vertex of a scenario. A vertex is alive at t iff
/// it has not died by t; black vertices that have not arrived yet count as
/// alive.
class Lifetimes {
 public:
  static constexpr TurnIndex kNever = UINT32_MAX;

  Lifetimes() = default;
  explicit Lifetimes(std::size_t vertex_count) : death_(vertex_count, kNever) {}

  void resize(std::size_t vertex_count) {
    if (death_.size() < vertex_count) death_.resize(vertex_count, kNever);
  }
  std::size_t size() const { return death_.size(); }

  bool alive(VertexId v, TurnIndex t) const {
    return v.dense() >= death_.size() || death_[v.dense()] > t;
  }
  TurnIndex death_turn(VertexId v) const { return death_[v.dense()]; }
  void set_death(VertexId v, TurnIndex t) { death_[v.dense()] = t; }

 private:
  std::vector<TurnIndex> death_;
};

/// Alive/dead bookkeeping of one turn, computed from scratch.
struct VitalityState {
  TurnIndex turn = 0;
  std::vector<VertexId> alive;   // A_t restricted to vertices of F_t
  std::vector<VertexId> dead;    // D_t
  std::vector<VertexId> portals;
  std::vector<VertexId> deaths;  // D_t \ D_{t-1}
  std::optional<VertexId> dispatch;
};

/// Dead vertices: black with infinite sec-dist, white with infinite dist.
bool is_dead(const OnlineForest& forest, VertexId v, TurnIndex t,
             TieBreak order = TieBreak::forward);
bool is_dead(const OnlineForest& forest, const MiniMaxTable& table, VertexId v);

/// Minimal deficient black set containing b, built from the game tree rooted
/// at b: white vertices are joined to their parent and to their chosen child,
/// and X is the set of black vertices reachable from b that way.
struct HallWitness {
  std::vector<VertexId> blacks;
  std::vector<VertexId> neighborhood;
};

std::optional<HallWitness> hall_witness(const OnlineForest& forest, VertexId b,
                                        TurnIndex t,
                                        TieBreak order = TieBreak::forward);

/// Number of neighbors of v in F_t that are alive at turn `alive_at`.
std::uint32_t alive_neighbor_count(const OnlineForest& forest,
                                   const Lifetimes& life, VertexId v,
                                   TurnIndex t, TurnIndex alive_at);

/// Black vertices of F_t with at least three neighbors alive at t-1.
std::vector<VertexId> life_portals(const OnlineForest& forest,
                                   const Lifetimes& life, TurnIndex t);

struct DyingRegion {
  std::vector<VertexId> vertices;  // sorted
  /// False when the arrival breaks Hall's condition; the region is then the
  /// observed set of deaths rather than a structural prediction.
  bool structural = true;
};

/// Predicted D_t \ D_{t-1}: empty when b_t has two or more neighbors alive
/// at t-1, otherwise everything reachable from b_t through vertices alive at
/// t-1 without entering a life portal.
DyingRegion dying_region(const OnlineForest& forest, const Lifetimes& life,
                         TurnIndex t, Distance arrival_dist);

/// First black vertex on `path` with at least two neighbors alive at t.
std::optional<std::size_t> dispatch_index(const OnlineForest& forest,
                                          const Lifetimes& life,
                                          const Path& path, TurnIndex t);

struct PathSplit {
  Path prefix;  // vertices that die in turn t
  Path suffix;  // the rest, starting at the dispatching vertex

  /// Edge counts: the edge leaving the prefix belongs to the prefix, so
  /// prefix_len() + suffix_len() equals the length of the whole path.
  std::size_t prefix_len() const;
  std::size_t suffix_len() const { return suffix.length(); }
};

/// Splits `path` after its longest initial run of vertices dying in turn t.
PathSplit split_path(const Path& path, const Lifetimes& life, TurnIndex t);

/// Reference computation from scratch: tables at t-1 and t, all alive sets,
/// portals and the dispatching vertex.
VitalityState compute_vitality(const OnlineForest& forest, TurnIndex t,
                               TieBreak order = TieBreak::forward);

/// Death turns for every vertex of the scenario, recomputed turn by turn
/// with fresh tables (reference for the incremental trace).
Lifetimes reference_lifetimes(const OnlineForest& forest, TurnIndex upto,
                              TieBreak order = TieBreak::forward);

}  // namespace saptree
