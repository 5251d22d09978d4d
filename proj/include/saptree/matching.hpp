#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "saptree/distance.hpp"
#include "saptree/forest.hpp"
#include "saptree/minimax.hpp"

namespace saptree {

/// Partial symmetric partner map over dense vertex handles.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::size_t vertex_count) : partner_(vertex_count, kFree) {}

  /// Grows the domain; new vertices are free.
  void resize(std::size_t vertex_count) {
    if (partner_.size() < vertex_count) partner_.resize(vertex_count, kFree);
  }
  std::size_t domain() const { return partner_.size(); }

  std::optional<VertexId> partner(VertexId v) const;
  bool is_free(VertexId v) const {
    return v.dense() >= partner_.size() || partner_[v.dense()] == kFree;
  }
  std::size_t size() const { return size_; }

  void match(VertexId a, VertexId b);
  void unmatch(VertexId v);

  /// Matched pairs as (smaller, larger) handles, sorted.
  std::vector<Edge> pairs() const;

  /// Throws invalid_matching unless every pair is an edge of F_t.
  void validate(const OnlineForest& forest, TurnIndex t) const;

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.pairs() == b.pairs();
  }

 private:
  static constexpr std::uint32_t kFree = UINT32_MAX;
  std::vector<std::uint32_t> partner_;
  std::size_t size_ = 0;
};

/// Alternating path from a free black vertex to a free white one. The path
/// must start with an unmatched edge and alternate strictly.
bool is_augmenting_path(const Matching& matching, const Path& path);

/// Breadth-first alternating search from the free black vertex b in F_t:
/// unmatched edges out of black vertices, matched edges out of white ones.
/// Neighbors are expanded in tie-break order, so among shortest paths the
/// one found first is returned.
std::optional<Path> shortest_augmenting_path(const OnlineForest& forest,
                                             const Matching& matching,
                                             VertexId b, TurnIndex t,
                                             TieBreak order = TieBreak::forward);

/// Swaps matched and unmatched edges along the path. Throws invalid_path.
Matching augment(Matching matching, const Path& path);

/// Maximum matching of F_t by repeatedly matching a leaf to its parent.
Matching tree_max_matching(const OnlineForest& forest, TurnIndex t);

struct SapTurn {
  TurnIndex t = 0;
  std::optional<std::size_t> pi_len;
  Distance dist;
  std::size_t matching_size = 0;
};

/// Replays the arrival log of `scenario` and runs Shortest Augmenting Path
/// on its own matching, recording the applied path length next to
/// dist_t(b_t). Turns without an augmenting path leave b_t unmatched.
std::vector<SapTurn> run_sap_online(const OnlineForest& scenario,
                                    TieBreak order = TieBreak::forward);

}  // namespace saptree
