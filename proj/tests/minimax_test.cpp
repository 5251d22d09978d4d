#include "doctest.h"

#include "fixtures.hpp"
#include "saptree/error.hpp"
#include "saptree/minimax.hpp"

using namespace saptree;
using saptree::testing::chain3;
using saptree::testing::random_forest;
using saptree::testing::star;

namespace {

Distance d(std::uint32_t v) { return Distance(v); }
const Distance kInf = Distance::infinity();

Path path_of(std::initializer_list<VertexId> vs) { return Path{vs}; }

}  // namespace

TEST_CASE("distance algebra") {
  CHECK(kInf.next() == kInf);
  CHECK(d(3).next() == d(4));
  CHECK(d(1000000) < kInf);
  CHECK(within_one(kInf, kInf));
  CHECK(!within_one(d(5), kInf));
  CHECK(within_one(d(2), d(3)));
  CHECK(kInf.to_string() == "inf");
}

TEST_CASE("rooted game values") {
  // w1 - b1 - w2 - b2 - w3 rooted at b2.
  OnlineForest f(3);
  f.add_black({f.white(1), f.white(2)});
  f.add_black({f.white(2), f.white(3)});
  auto view = f.rooted_view(f.black(2), 2);
  RootedGame game(view);
  CHECK(game.revenue(f.white(3)).value == d(0));
  CHECK(game.revenue(f.black(1)).value == d(1));
  CHECK(game.revenue(f.white(2)).value == d(2));
  CHECK(game.revenue(f.black(2)) == Revenue{d(1), f.white(3)});
  CHECK(game.path(f.black(2)) == path_of({f.black(2), f.white(3)}));
  CHECK(mini_max_path(view, f.white(3)) == path_of({f.white(3)}));

  OnlineForest s(2);
  s.add_black({s.white(1), s.white(2)});
  auto sv = s.rooted_view(s.black(1), 1);
  CHECK(mini_max_path(sv, s.black(1)) == path_of({s.black(1), s.white(1)}));

  OnlineForest leaf(1);
  leaf.add_black({leaf.white(1)});
  auto lv = leaf.rooted_view(leaf.white(1), 1);
  CHECK(mini_max_revenue(lv, leaf.black(1)).value == kInf);
  CHECK(!mini_max_revenue(lv, leaf.black(1)).next);
}

TEST_CASE("chain scenario quantities") {
  auto f = chain3();
  CHECK(dist_dir(f, f.black(1), 1) == Revenue{d(1), f.white(1)});
  CHECK(dist_dir(f, f.black(3), 3).value == d(5));
  CHECK(dist_dir(f, f.white(1), 0).value == d(0));
  CHECK(sec_dist_dir(f, f.black(3), 3).value == kInf);
  CHECK(sec_dist_dir(f, f.black(2), 2) == Revenue{d(3), f.white(2)});
  CHECK(det_dist_dir(f, f.black(3), f.white(3), 3).value == d(4));
  const Path chain = path_of({f.black(3), f.white(3), f.black(2), f.white(2),
                              f.black(1), f.white(1)});
  CHECK(det_path(f, f.black(3), f.white(3), 3) == chain);
  CHECK(path_at(f, f.black(3), 3) == chain);
  CHECK(path_at(f, f.black(3), 3).length() == 5);
  CHECK(sec_path_at(f, f.black(1), 1) == path_of({f.black(1), f.white(2)}));
  CHECK(sec_path_at(f, f.black(2), 2) ==
        path_of({f.black(2), f.white(2), f.black(1), f.white(1)}));
  CHECK(sec_path_at(f, f.black(3), 3) == path_of({f.black(3)}));
  CHECK(path_at(f, f.white(1), 0) == path_of({f.white(1)}));

  auto table = MiniMaxTable::compute(f, 3);
  CHECK(table.path(f.black(3)) == chain);
  CHECK(table.det(f.black(3), f.white(3)).value == d(4));
}

TEST_CASE("star scenario quantities") {
  auto f = star();
  CHECK(sec_dist_dir(f, f.black(1), 1).value == d(1));
  CHECK(det_path(f, f.white(1), f.black(1), 1) ==
        path_of({f.white(1), f.black(1), f.white(2)}));
  CHECK(path_at(f, f.black(2), 2) ==
        path_of({f.black(2), f.white(1), f.black(1), f.white(2)}));
}

TEST_CASE("edge-determined boundary values and errors") {
  OnlineForest f(2);
  f.add_black({f.white(1)});
  CHECK(det_dist_dir(f, f.white(1), f.black(1), 1).value == kInf);
  CHECK(det_dist_dir(f, f.black(1), f.white(1), 1).value == d(0));
  CHECK(det_path(f, f.black(1), f.white(1), 1) ==
        path_of({f.black(1), f.white(1)}));
  CHECK_THROWS_AS(det_dist_dir(f, f.white(2), f.black(1), 1), Error);
  CHECK_THROWS_AS(sec_path_at(f, f.white(2), 1), Error);
  CHECK_THROWS_AS(dist_dir(f, f.black(1), 0), Error);
}

namespace {

/// Cross-checks the rerooting table against explicit per-vertex rooting and
/// the identities that tie the two formulations together.
void check_identities(const OnlineForest& f, TurnIndex t, TieBreak order) {
  auto table = MiniMaxTable::compute(f, t, order);
  for (std::uint32_t i = 0; i < f.vertex_count(t); ++i) {
    const VertexId v(i);
    const auto first = dist_dir(f, v, t, order);
    const auto second = sec_dist_dir(f, v, t, order);
    CHECK(table.dist(v) == first.value);
    CHECK(table.dir(v) == first.next);
    if (first.next) {
      CHECK(table.sec_dist(v) == second.value);
      CHECK(table.sec_dir(v) == second.next);
    }
    if (f.is_black(v)) {
      CHECK(table.dist(v) <= table.sec_dist(v));
    } else {
      CHECK(table.sec_dist(v) <= table.dist(v));
    }
    CHECK(table.path(v) == path_at(f, v, t, order));
    if (table.dist(v).is_finite()) {
      CHECK(table.path(v).length() == table.dist(v).value());
    }
    if (auto dir = table.dir(v)) {
      CHECK(table.det(v, *dir).value.next() == table.dist(v));
      CHECK(table.det_path(v, *dir) == table.path(v));
      CHECK(table.sec_path(v) == (table.sec_dir(v) ? sec_path_at(f, v, t, order)
                                                   : path_of({v})));
    }
    if (auto sd = table.sec_dir(v)) {
      CHECK(table.det(v, *sd).value.next() == table.sec_dist(v));
      if (table.sec_dist(v).is_finite()) {
        CHECK(table.sec_path(v).length() == table.sec_dist(v).value());
      }
    }
    for (VertexId u : f.neighbors_view(v, t)) {
      const auto det = table.det(u, v);
      CHECK(det == det_dist_dir(f, u, v, t, order));
      CHECK(det.value == (table.dir(v) == u ? table.sec_dist(v) : table.dist(v)));
      if (det.value.is_finite()) {
        CHECK(table.det_path(u, v).length() == det.value.value() + 1);
      }
      if (f.is_black(v)) {
        CHECK(table.dist(v) <= det.value);
        CHECK(det.value <= table.sec_dist(v));
      } else {
        CHECK(table.sec_dist(v) <= det.value);
        CHECK(det.value <= table.dist(v));
      }
    }
  }
}

}  // namespace

TEST_CASE("property: rerooting table agrees with explicit rooting") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto f = random_forest(10, 10, 3, seed);
    for (TurnIndex t = 0; t <= f.turn(); ++t) {
      check_identities(f, t, TieBreak::forward);
      check_identities(f, t, TieBreak::reversed);
    }
  }
}

TEST_CASE("property: distances never decrease over a vertex's lifetime") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    auto f = random_forest(14, 14, 3, seed);
    auto prev = MiniMaxTable::compute(f, 0);
    for (TurnIndex t = 1; t <= f.turn(); ++t) {
      auto cur = MiniMaxTable::compute(f, t);
      for (std::uint32_t i = 0; i < f.vertex_count(t - 1); ++i) {
        CHECK(prev.dist(VertexId(i)) <= cur.dist(VertexId(i)));
        CHECK(prev.sec_dist(VertexId(i)) <= cur.sec_dist(VertexId(i)));
      }
      prev = std::move(cur);
    }
  }
}

TEST_CASE("incremental updates match a fresh table") {
  for (std::uint64_t seed = 7; seed < 20; ++seed) {
    auto f = random_forest(15, 15, 3, seed);
    MiniMaxTable inc;
    inc = MiniMaxTable::compute(f, 0);
    for (TurnIndex t = 1; t <= f.turn(); ++t) {
      inc.update_component(f, t, f.black(t));
      auto fresh = MiniMaxTable::compute(f, t);
      for (std::uint32_t i = 0; i < f.vertex_count(t); ++i) {
        CHECK(inc.at(VertexId(i)) == fresh.at(VertexId(i)));
      }
    }
  }
}
