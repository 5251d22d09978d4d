#include "doctest.h"

#include "fixtures.hpp"
#include "saptree/error.hpp"
#include "saptree/scenarios.hpp"

using namespace saptree;

namespace {

const Family kFamilies[] = {Family::random_tree, Family::degree2,
                            Family::pendant_chain, Family::star_burst};

}  // namespace

TEST_CASE("pendant chain is the fixed chain") {
  auto e1 = generate(Family::pendant_chain, 3, 99);
  CHECK(e1 == InstanceFile{3, {{1, 2}, {2, 3}, {3}}});
  CHECK(write_instance(e1) == "white 3\nblack: 1 2\nblack: 2 3\nblack: 3\n");
  CHECK(generate(Family::pendant_chain, 1, 0) == InstanceFile{1, {{1}}});
}

TEST_CASE("generators are deterministic and valid") {
  for (Family fam : kFamilies) {
    for (std::uint32_t n : {2u, 3u, 7u, 40u, 200u}) {
      for (std::uint64_t seed : {1ull, 2ull, 77ull}) {
        auto a = generate(fam, n, seed);
        auto b = generate(fam, n, seed);
        CHECK(write_instance(a) == write_instance(b));
        CHECK(a.white_count == n);
        auto f = build_forest(a);
        CHECK(f.turn() == a.arrivals.size());
        if (fam == Family::degree2) {
          CHECK(f.component_count() == 1);
          for (const auto& arr : a.arrivals) CHECK(arr.size() >= 2);
          auto tr = trace_scenario(f);
          for (const auto& rec : tr.turns) CHECK(rec.deaths.empty());
        }
        if (fam == Family::random_tree) {
          CHECK(f.turn() == n);
          CHECK(f.edge_count() == 2 * n - 1);
        }
        if (fam == Family::star_burst && n >= 3) CHECK(a.arrivals[0].size() >= 3);
      }
    }
  }
  CHECK(write_instance(generate(Family::random_tree, 50, 1)) !=
        write_instance(generate(Family::random_tree, 50, 2)));
}

TEST_CASE("infeasible and invalid requests") {
  try {
    generate(Family::degree2, 1, 0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::infeasible_family);
  }
  CHECK_THROWS_AS(generate(Family::random_tree, 0, 0), Error);
  CHECK_THROWS_AS(parse_family("spiral"), Error);
  CHECK(parse_family("star_burst") == Family::star_burst);
}

TEST_CASE("random tree edges are spread evenly") {
  const std::uint32_t n = 4;
  std::vector<int> hits(n * n, 0);
  const int runs = 4000;
  for (int s = 0; s < runs; ++s) {
    auto inst = generate(Family::random_tree, n, s);
    auto f = build_forest(inst);
    // White degrees are exchangeable; each has mean (2n-1)/n.
    for (std::uint32_t w = 1; w <= n; ++w) hits[w - 1] += f.adjacency(f.white(w)).size();
  }
  const double expect = runs * (2.0 * n - 1) / n;
  for (std::uint32_t w = 0; w < n; ++w) {
    CHECK(std::abs(hits[w] - expect) < 0.05 * expect);
  }
}

TEST_CASE("instance parsing") {
  for (Family fam : kFamilies) {
    auto inst = generate(fam, 30, 5);
    CHECK(parse_instance(write_instance(inst)) == inst);
  }
  CHECK(parse_instance("white 2\n") == InstanceFile{2, {}});
  CHECK(parse_instance("white 2\r\nblack: 1 2\r\n") == InstanceFile{2, {{1, 2}}});

  auto expect_parse = [](std::string_view text, std::size_t line, std::size_t field) {
    try {
      parse_instance(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.field() == field);
      CHECK(e.code() == ErrorCode::parse);
    }
  };
  expect_parse("", 1, 1);
  expect_parse("whites 3\n", 1, 1);
  expect_parse("white 0\n", 1, 2);
  expect_parse("white x\n", 1, 2);
  expect_parse("white 3\nblack: 1 0\n", 2, 3);
  expect_parse("white 3\nblack: 1 4\n", 2, 3);
  expect_parse("white 3\nblack: 1\nblue: 2\n", 3, 1);
  expect_parse("white 3\nblack:\n", 2, 2);
  expect_parse("white 3\nblack: 1 -2\n", 2, 3);
}

TEST_CASE("cycle detection names the offending neighbors") {
  auto inst = parse_instance("white 2\nblack: 1 2\nblack: 2 1\n");
  try {
    build_forest(inst);
    FAIL("expected a cycle error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::cycle);
    const std::string what = e.what();
    CHECK(what.find("arrival 2") != std::string::npos);
    CHECK(what.find("w1") != std::string::npos);
    CHECK(what.find("w2") != std::string::npos);
  }
}

TEST_CASE("run records") {
  auto e1 = build_forest(generate(Family::pendant_chain, 3, 0));
  auto rec = make_run_record(trace_scenario(e1), 2.0);
  REQUIRE(rec.rows.size() == 3);
  const std::string csv = write_run_record(rec);
  CHECK(csv.substr(0, csv.find('\n')) == kRunHeader);
  CHECK(parse_run_record(csv) == rec);
  CHECK(rec.rows[2].dist == Distance(5));
  CHECK(rec.rows[2].sec_dist == Distance::infinity());
  CHECK(!rec.rows[2].dispatch_id);
  CHECK(csv.find("3,3,1,5,inf,5,0,,6,NO_DISPATCH\n") != std::string::npos);

  auto twins = saptree::testing::build(1, {{1}, {1}});
  auto tr = make_run_record(trace_scenario(twins), 2.0);
  CHECK(!tr.rows[1].pi_len);
  CHECK(!tr.rows[1].prefix_len);
  CHECK(tr.rows[1].turn_class == TurnClass::dist_infinite);
  CHECK(parse_run_record(write_run_record(tr)) == tr);

  auto empty = build_forest(InstanceFile{3, {}});
  CHECK(write_run_record(make_run_record(trace_scenario(empty), 2.0)) ==
        std::string(kRunHeader) + "\n");

  CHECK_THROWS_AS(parse_run_record("t,b\n"), ParseError);
  const std::string bad = std::string(kRunHeader) + "\n1,1,1,1,inf,1,0,1,0,CASE_WEIRD\n";
  try {
    parse_run_record(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.field() == 10);
  }
}
