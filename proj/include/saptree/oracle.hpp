#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "saptree/distance.hpp"
#include "saptree/forest.hpp"
#include "saptree/matching.hpp"

namespace saptree {

/// Size limits for the exhaustive searches below. Inputs above a limit are
/// refused with budget_exceeded.
struct OracleBudget {
  std::size_t max_component_size = 12;  // vertices, matching enumeration
  std::size_t max_subset_size = 12;      // black vertices, Hall subsets
};

/// All maximum matchings of the component of `root` in F_t, by exhaustive
/// search. With `must_free` set, the maximum is taken over matchings that
/// leave that vertex unmatched (maximum matchings of F_t minus the vertex).
/// Matchings span the whole vertex domain of F_t but only use edges of the
/// component.
std::vector<Matching> enumerate_component_max_matchings(
    const OnlineForest& forest, VertexId root, TurnIndex t,
    std::optional<VertexId> must_free = {}, const OracleBudget& budget = {});

/// Same over all of F_t: the product of the per-component enumerations. The
/// budget applies to the largest component.
std::vector<Matching> enumerate_max_matchings(
    const OnlineForest& forest, TurnIndex t,
    std::optional<VertexId> must_free = {}, const OracleBudget& budget = {});

/// Size and number of maximum matchings of a component, by a dynamic
/// program over the rooted tree. Independent of the enumeration above.
struct MatchingCount {
  std::size_t size = 0;
  std::uint64_t count = 0;
};
MatchingCount count_component_max_matchings(const OnlineForest& forest,
                                            VertexId root, TurnIndex t,
                                            std::optional<VertexId> must_free = {});

/// Minimum length of an alternating path from the free black vertex b to a
/// free white vertex, by enumerating every such path. Absent when none.
std::optional<std::size_t> brute_shortest_aug(const OnlineForest& forest,
                                              const Matching& matching,
                                              VertexId b, TurnIndex t,
                                              const OracleBudget& budget = {});

/// Worst case over maximum matchings of F_t with b free of the shortest
/// augmenting path length from b; infinity when some such matching admits
/// no augmenting path.
Distance adversary_game_value(const OnlineForest& forest, VertexId b,
                              TurnIndex t, const OracleBudget& budget = {});

/// |N_t(X)| < |X|.
bool is_deficient(const OnlineForest& forest, const std::vector<VertexId>& blacks,
                  TurnIndex t);

/// Deficient and no proper subset is deficient, checked over all subsets.
bool is_minimal_deficient(const OnlineForest& forest,
                          const std::vector<VertexId>& blacks, TurnIndex t,
                          const OracleBudget& budget = {});

/// Smallest set of black vertices (ties: lowest subset bitmask) that
/// contains b, is deficient, and has no deficient proper subset. Sorted.
std::optional<std::vector<VertexId>> brute_hall(const OnlineForest& forest,
                                                VertexId b, TurnIndex t,
                                                const OracleBudget& budget = {});

}  // namespace saptree
