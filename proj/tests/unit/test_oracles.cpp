#include <stdexcept>
#include "doctest.h"
#include "ptcolor/oracles.hpp"
#include "test_util.hpp"

using namespace ptcolor;
using namespace ptcolor::testing;

TEST_CASE("brute_three_color basics") {
  auto c5 = brute_three_color(cycle_graph(5));
  REQUIRE(c5.has_value());
  CHECK(verify_coloring(cycle_graph(5), *c5));
  CHECK_FALSE(brute_three_color(complete_graph(4)).has_value());
  auto empty5 = brute_three_color(Graph::from_edge_list(5, {}));
  REQUIRE(empty5.has_value());
  for (int u = 0; u < 5; ++u) CHECK(empty5->color[u] >= 1);
  CHECK_THROWS_AS(brute_three_color(complete_graph(4), 3), std::invalid_argument);
}

TEST_CASE("brute_three_color agrees with a plain k-colorability check") {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = random_graph(8, 0.4, 7000 + seed);
    auto got = brute_three_color(g);
    CHECK(got.has_value() == brute_k_colorable(g, 3));
    if (got) CHECK(verify_coloring(g, *got));
  }
}

TEST_CASE("find_induced_path basics") {
  auto from0 = find_induced_path(cycle_graph(5), 4, 0);
  REQUIRE(from0.has_value());
  CHECK(verify_path(cycle_graph(5), *from0, 4, 0));
  CHECK_FALSE(find_induced_path(complete_graph(4), 3).has_value());
  auto whole = find_induced_path(path_graph(6), 6);
  REQUIRE(whole.has_value());
  CHECK(verify_path(path_graph(6), *whole, 6));
  // the longest induced path in the petersen graph has five vertices
  CHECK(find_induced_path(petersen_graph(), 5).has_value());
  CHECK_FALSE(find_induced_path(petersen_graph(), 6).has_value());
}

TEST_CASE("brute_list_color basics") {
  Graph k3 = complete_graph(3);
  ListInstance li;
  li.region = {0, 1, 2};
  li.lists = {{0, {1, 2}}, {1, {1, 2}}, {2, {1, 2}}};
  CHECK_FALSE(brute_list_color(k3, li).has_value());

  Graph single = Graph::from_edge_list(1, {});
  ListInstance li1;
  li1.region = {0};
  li1.lists = {{0, {3}}};
  auto got = brute_list_color(single, li1);
  REQUIRE(got.has_value());
  CHECK(got->color[0] == 3);

  Graph c4 = cycle_graph(4);
  ListInstance li4;
  li4.region = {0, 1, 2, 3};
  li4.lists = {{0, {1, 2}}, {1, {1, 2}}, {2, {1, 2}}, {3, {1, 2}}};
  auto alt = brute_list_color(c4, li4);
  REQUIRE(alt.has_value());
  CHECK(verify_coloring(c4, *alt));
}

TEST_CASE("nae_solve basics") {
  NaeFormula one;
  one.num_vars = 3;
  one.clauses = {{1, 2, 3}};
  auto sat = nae_solve(one);
  REQUIRE(sat.has_value());
  CHECK(nae_evaluate(one, *sat));

  // x2 != x1 and x2 == x1 cannot both hold
  NaeFormula contradiction;
  contradiction.num_vars = 2;
  contradiction.clauses = {{1, 1, 2}, {1, 1, -2}};
  CHECK_FALSE(nae_solve(contradiction).has_value());

  NaeFormula empty;
  empty.num_vars = 0;
  CHECK(nae_solve(empty).has_value());
}

TEST_CASE("find_triangle returns the lexicographically first triangle") {
  auto tri = find_triangle(complete_graph(4));
  REQUIRE(tri.has_value());
  CHECK(tri->vertices == std::array<int, 3>{0, 1, 2});
  CHECK_FALSE(find_triangle(cycle_graph(5)).has_value());
  CHECK_FALSE(find_triangle(petersen_graph()).has_value());
}

TEST_CASE("verify_refutation on small subgraphs") {
  Graph k4 = complete_graph(4);
  CHECK(verify_refutation(k4, SmallSubgraphRefutation{{0, 1, 2, 3}, false}));
  Graph k3 = complete_graph(3);
  CHECK_FALSE(verify_refutation(k3, SmallSubgraphRefutation{{0, 1, 2}, false}));
}

TEST_CASE("verify_refutation replays list exhaustion") {
  Graph k4 = complete_graph(4);
  CHECK(verify_refutation(k4, ListExhaustionRefutation{{0, 1}, {0, 1, 2, 3}}));
  // wrong frontier must not replay
  CHECK_FALSE(verify_refutation(k4, ListExhaustionRefutation{{0, 1}, {0, 1}}));
  // a 3-colorable graph never exhausts
  Graph c5 = cycle_graph(5);
  auto cr = closure_F(c5, {0, 1});
  CHECK_FALSE(verify_refutation(c5, ListExhaustionRefutation{{0, 1}, cr.frontier}));
}
