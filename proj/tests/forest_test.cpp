#include "doctest.h"

#include "fixtures.hpp"
#include "saptree/error.hpp"
#include "saptree/forest.hpp"

using namespace saptree;
using saptree::testing::random_forest;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::precondition;
}

}  // namespace

TEST_CASE("construction") {
  OnlineForest one(1);
  CHECK(one.white_count() == 1);
  CHECK(one.turn() == 0);
  CHECK(one.edge_count() == 0);
  OnlineForest three(3);
  CHECK(three.component_count() == 3);
  CHECK(three.neighbors_at(three.white(3), 0).empty());
  CHECK(code_of([] { OnlineForest f(0); }) == ErrorCode::invalid_argument);
}

TEST_CASE("arrivals and cycle rejection") {
  OnlineForest f(3);
  const std::uint32_t a[] = {1, 2};
  CHECK(f.add_black_indices(a) == 1);
  CHECK(f.neighbors_at(f.black(1), 1) ==
        std::vector<VertexId>{f.white(1), f.white(2)});
  CHECK(code_of([&] { f.add_black_indices(a); }) == ErrorCode::cycle);
  try {
    f.add_black_indices(a);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("w1") != std::string::npos);
    CHECK(std::string(e.what()).find("w2") != std::string::npos);
  }
  CHECK(f.turn() == 1);
  const std::uint32_t c[] = {3};
  CHECK(f.add_black_indices(c) == 2);
  CHECK(f.edge_count() == 3);

  const std::uint32_t bad[] = {4};
  CHECK(code_of([&] { f.add_black_indices(bad); }) == ErrorCode::unknown_vertex);
  CHECK(code_of([&] { f.add_black(std::span<const VertexId>{}); }) ==
        ErrorCode::empty_neighbors);
  CHECK(code_of([&] { f.neighbors_at(f.black(2), 1); }) == ErrorCode::not_arrived);
}

TEST_CASE("white neighborhoods grow, black ones are frozen") {
  OnlineForest f(3);
  f.add_black({f.white(1), f.white(2)});
  f.add_black({f.white(1)});
  CHECK(f.neighbors_at(f.white(1), 2) ==
        std::vector<VertexId>{f.black(1), f.black(2)});
  CHECK(f.neighbors_at(f.white(1), 1) == std::vector<VertexId>{f.black(1)});
  CHECK(f.neighbors_at(f.white(1), 0).empty());
}

TEST_CASE("rooted views and subtrees") {
  OnlineForest f(2);
  f.add_black({f.white(1), f.white(2)});
  auto at_b = f.rooted_view(f.black(1), 1);
  CHECK(at_b.children(f.black(1)).size() == 2);
  CHECK(at_b.children(f.white(1)).empty());
  auto at_w = f.rooted_view(f.white(1), 1);
  REQUIRE(at_w.children(f.white(1)).size() == 1);
  CHECK(at_w.children(f.white(1))[0] == f.black(1));
  CHECK(at_w.children(f.black(1))[0] == f.white(2));
  auto sub = subtree(at_w, f.black(1));
  CHECK(sub.size() == 2);
  CHECK(sub.root() == f.black(1));
  CHECK(subtree(at_w, f.white(2)).size() == 1);
  CHECK(subtree(at_w, f.white(1)).vertices() == at_w.vertices());
  CHECK(code_of([&] { subtree(at_w, VertexId(7)); }) == ErrorCode::not_in_component);

  OnlineForest lone(1);
  auto v = lone.rooted_view(lone.white(1), 0);
  CHECK(v.size() == 1);
  CHECK(!v.parent(lone.white(1)));
}

TEST_CASE("induced subforest") {
  OnlineForest f(2);
  f.add_black({f.white(1), f.white(2)});
  CHECK(f.induced_subforest({}, 1).vertices.empty());
  const VertexId ends[] = {f.white(1), f.white(2)};
  auto g = f.induced_subforest(ends, 1);
  CHECK(g.vertices.size() == 2);
  CHECK(g.edges.empty());
  const VertexId all[] = {f.white(1), f.white(2), f.black(1)};
  CHECK(f.induced_subforest(all, 1).edges.size() == 2);
}

TEST_CASE("property: forest identity and view bijection on random instances") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto f = random_forest(12, 10, 3, seed);
    std::size_t arrived_edges = 0;
    for (const auto& a : f.arrivals()) arrived_edges += a.size();
    CHECK(f.edge_count() == arrived_edges);
    CHECK(f.vertex_count() - f.component_count() == f.edge_count());
    for (TurnIndex t = 0; t <= f.turn(); ++t) {
      for (std::uint32_t v = 0; v < f.vertex_count(t); ++v) {
        auto view = f.rooted_view(VertexId(v), t);
        std::size_t child_total = 0;
        for (VertexId u : view.vertices()) {
          for (VertexId c : view.children(u)) {
            ++child_total;
            CHECK(view.parent(c) == u);
          }
          auto ch = view.children(u);
          CHECK(std::is_sorted(ch.begin(), ch.end()));
        }
        CHECK(child_total + 1 == view.size());
        if (f.is_black(VertexId(v)) && t >= f.arrival(VertexId(v))) {
          CHECK(f.neighbors_at(VertexId(v), t) ==
                f.neighbors_at(VertexId(v), f.turn()));
        }
      }
    }
  }
}
