#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "saptree/error.hpp"
#include "saptree/minimax.hpp"
#include "saptree/oracle.hpp"
#include "saptree/vitality.hpp"

using namespace saptree;
using saptree::testing::build;
using saptree::testing::chain3;
using saptree::testing::random_forest;

namespace {

std::vector<std::vector<Edge>> as_pairs(const std::vector<Matching>& ms) {
  std::vector<std::vector<Edge>> out;
  for (const auto& m : ms) out.push_back(m.pairs());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("matching enumeration on small fixtures") {
  auto edge = build(1, {{1}});
  auto one = enumerate_max_matchings(edge, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].size() == 1);

  auto p = build(2, {{1, 2}});
  CHECK(enumerate_max_matchings(p, 1).size() == 2);

  auto c = chain3();
  auto ms = enumerate_max_matchings(c, 2);
  REQUIRE(ms.size() == 3);
  for (const auto& m : ms) CHECK(m.size() == 2);
  const VertexId w1 = c.white(1), w2 = c.white(2), w3 = c.white(3);
  const VertexId b1 = c.black(1), b2 = c.black(2);
  std::vector<std::vector<Edge>> expect = {
      {{w1, b1}, {w2, b2}}, {{w1, b1}, {w3, b2}}, {{w2, b1}, {w3, b2}}};
  for (auto& e : expect) std::sort(e.begin(), e.end());
  std::sort(expect.begin(), expect.end());
  CHECK(as_pairs(ms) == expect);

  // b3 free: the three matchings of the turn-2 chain.
  CHECK(enumerate_max_matchings(c, 3, c.black(3)).size() == 3);
  CHECK(enumerate_max_matchings(c, 3).size() == 1);
}

TEST_CASE("budget refusal") {
  auto f = build(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
  CHECK_THROWS_AS(enumerate_max_matchings(f, 6), Error);
  try {
    enumerate_max_matchings(f, 6);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::budget_exceeded);
  }
  OracleBudget wide{16, 16};
  CHECK_NOTHROW(enumerate_max_matchings(f, 6, std::nullopt, wide));
  CHECK_THROWS_AS(brute_hall(f, f.black(1), 6, OracleBudget{12, 3}), Error);
}

TEST_CASE("enumeration count matches the tree program") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    auto f = random_forest(6, 6, 3, seed);
    for (TurnIndex t = 0; t <= f.turn(); ++t) {
      for (std::uint32_t v = 0; v < f.vertex_count(t); ++v) {
        const VertexId id(v);
        auto all = enumerate_component_max_matchings(f, id, t, std::nullopt, {16, 16});
        auto dp = count_component_max_matchings(f, id, t);
        CHECK(all.size() == dp.count);
        CHECK(all.front().size() == dp.size);
        auto freed = enumerate_component_max_matchings(f, id, t, id, {16, 16});
        auto dp_freed = count_component_max_matchings(f, id, t, id);
        CHECK(freed.size() == dp_freed.count);
        CHECK(freed.front().size() == dp_freed.size);
        for (const auto& m : freed) CHECK(m.is_free(id));
      }
    }
  }
}

TEST_CASE("adversary game value") {
  auto c = chain3();
  CHECK(adversary_game_value(c, c.black(1), 1) == Distance(1));
  CHECK(adversary_game_value(c, c.black(3), 3) == Distance(5));
  CHECK(adversary_game_value(c, c.black(3), 3) == dist_dir(c, c.black(3), 3).value);
  auto twins = build(1, {{1}, {1}});
  CHECK(adversary_game_value(twins, twins.black(2), 2) == Distance::infinity());
  CHECK(adversary_game_value(twins, twins.black(1), 2) == Distance::infinity());
}

TEST_CASE("brute shortest augmenting path") {
  auto c = chain3();
  Matching m(c.vertex_count(3));
  CHECK(brute_shortest_aug(c, m, c.black(1), 1) == 1u);
  m.match(c.black(1), c.white(2));
  m.match(c.black(2), c.white(3));
  CHECK(brute_shortest_aug(c, m, c.black(3), 3) == 5u);
  CHECK_THROWS_AS(brute_shortest_aug(c, m, c.black(1), 3), Error);

  auto twins = build(1, {{1}, {1}});
  Matching s(twins.vertex_count(2));
  s.match(twins.black(1), twins.white(1));
  CHECK(!brute_shortest_aug(twins, s, twins.black(2), 2));
}

TEST_CASE("brute Hall sets") {
  auto c = chain3();
  CHECK(!brute_hall(c, c.black(3), 3));
  CHECK(!brute_hall(c, c.black(1), 1));
  auto twins = build(1, {{1}, {1}});
  auto x = brute_hall(twins, twins.black(2), 2);
  REQUIRE(x);
  CHECK(*x == std::vector<VertexId>{twins.black(1), twins.black(2)});
  CHECK(is_minimal_deficient(twins, *x, 2));
  // A deficient pair elsewhere does not make an alive vertex break Hall.
  auto mixed = build(3, {{1}, {1}, {2, 3}});
  CHECK(!brute_hall(mixed, mixed.black(3), 3));
  CHECK(!is_minimal_deficient(mixed, {mixed.black(1), mixed.black(2), mixed.black(3)}, 3));
}

TEST_CASE("oracles agree with the engine on random forests") {
  const OracleBudget budget{16, 16};
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    auto f = random_forest(6, 7, 3, seed);
    for (TurnIndex t = 1; t <= f.turn(); ++t) {
      const VertexId b = f.black(t);
      const Distance d = dist_dir(f, b, t).value;
      CHECK(adversary_game_value(f, b, t, budget) == d);
      auto x = brute_hall(f, b, t, budget);
      CHECK(x.has_value() == d.is_infinite());
      auto w = hall_witness(f, b, t);
      CHECK(w.has_value() == d.is_infinite());
      if (w) CHECK(is_minimal_deficient(f, w->blacks, t, budget));
      for (const auto& m : enumerate_component_max_matchings(f, b, t, b, budget)) {
        auto brute = brute_shortest_aug(f, m, b, t, budget);
        auto bfs = shortest_augmenting_path(f, m, b, t);
        CHECK(brute.has_value() == bfs.has_value());
        if (brute && bfs) CHECK(*brute == bfs->length());
      }
    }
  }
}
