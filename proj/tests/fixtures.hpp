#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "saptree/forest.hpp"

namespace saptree::testing {

inline OnlineForest build(std::uint32_t whites,
                          std::initializer_list<std::vector<std::uint32_t>> arrivals) {
  OnlineForest f(whites);
  for (const auto& a : arrivals) f.add_black_indices(a);
  return f;
}

/// w1..w3; b1 -> {w1,w2}; b2 -> {w2,w3}; b3 -> {w3}.
inline OnlineForest chain3() { return build(3, {{1, 2}, {2, 3}, {3}}); }

/// w1..w4; b1 -> {w1,w2,w3}; b2 -> {w1}.
inline OnlineForest star() { return build(4, {{1, 2, 3}, {1}}); }

/// Random valid forest: each arrival picks up to `max_degree` whites from
/// distinct components.
inline OnlineForest random_forest(std::uint32_t whites, std::uint32_t arrivals,
                                  std::uint32_t max_degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  OnlineForest f(whites);
  DisjointSets ds;
  ds.reset(whites);
  for (std::uint32_t a = 0; a < arrivals; ++a) {
    const std::uint32_t want = 1 + static_cast<std::uint32_t>(rng() % max_degree);
    std::vector<std::uint32_t> pick;
    std::vector<std::uint32_t> roots;
    for (std::uint32_t tries = 0; tries < 4 * want && pick.size() < want; ++tries) {
      const auto w = static_cast<std::uint32_t>(rng() % whites);
      const auto r = ds.find(w);
      bool clash = false;
      for (auto x : roots) clash |= x == r;
      if (clash) continue;
      roots.push_back(r);
      pick.push_back(w + 1);
    }
    for (std::size_t i = 1; i < pick.size(); ++i) ds.unite(pick[0] - 1, pick[i] - 1);
    f.add_black_indices(pick);
  }
  return f;
}

}  // namespace saptree::testing
