#include <stdexcept>
#include <variant>

#include "doctest.h"
#include "ptcolor/oracles.hpp"
#include "ptcolor/start_color.hpp"
#include "test_util.hpp"

using namespace ptcolor;
using namespace ptcolor::testing;

namespace {

// Soundness of any outcome against the oracles; assumes g is small.
void check_outcome_sound(const Graph& g, int v, int t, bool excluding, const StartOutcome& out) {
  const int n = g.num_vertices();
  if (const auto* refuted = std::get_if<NotThreeColorable>(&out)) {
    CHECK(verify_refutation(g, refuted->refutation));
    CHECK_FALSE(brute_three_color(g).has_value());
    return;
  }
  if (const auto* path = std::get_if<PathFromV>(&out)) {
    CHECK(verify_path(g, path->path, t, v));
    return;
  }
  const Coloring* col = nullptr;
  int limit = 0;
  if (const auto* plain = std::get_if<PlainColoring>(&out)) {
    col = &plain->coloring;
    limit = excluding ? std::max(1, t - 2) : std::max(2, t - 2);
  } else {
    const auto& with_tri = std::get<ColoringWithTriangle>(out);
    CHECK(verify_triangle(g, with_tri.triangle));
    col = &with_tri.coloring;
    limit = excluding ? std::max(2, 2 * t - 5) : std::max(3, 2 * t - 5);
  }
  CHECK(verify_coloring(g, *col));
  CHECK(col->colors_used() <= limit);
  for (int u = 0; u < n; ++u) {
    CHECK(col->assigned(u) == !(excluding && u == v));
  }
  // a coloring outcome asserts that no induced P_t starts at v, and for
  // t <= 4 the analysis is exact
  if (t <= 4) CHECK_FALSE(find_induced_path(g, t, v).has_value());
}

}  // namespace

TEST_CASE("color_from_start spec examples") {
  Graph k1 = Graph::from_edge_list(1, {});
  for (int t : {2, 3, 4, 5, 6}) {
    auto out = color_from_start(k1, 0, t);
    auto* plain = std::get_if<PlainColoring>(&out);
    REQUIRE(plain != nullptr);
    CHECK(plain->coloring.color[0] == 1);
  }

  // K_3 at t=4: the neighborhood analysis finds the triangle
  auto k3 = color_from_start(complete_graph(3), 0, 4);
  auto* with_tri = std::get_if<ColoringWithTriangle>(&k3);
  REQUIRE(with_tri != nullptr);
  CHECK(with_tri->coloring.colors_used() == 3);
  CHECK(with_tri->triangle.vertices == std::array<int, 3>{0, 1, 2});

  // K_4 at t=4: the whole graph is the obstruction
  auto k4 = color_from_start(complete_graph(4), 0, 4);
  auto* refuted = std::get_if<NotThreeColorable>(&k4);
  REQUIRE(refuted != nullptr);
  auto* small = std::get_if<SmallSubgraphRefutation>(&refuted->refutation);
  REQUIRE(small != nullptr);
  CHECK(small->vertices == std::vector<int>({0, 1, 2, 3}));

  // C_5 at t=4 yields the path 0,1,2,3
  auto c5 = color_from_start(cycle_graph(5), 0, 4);
  auto* path = std::get_if<PathFromV>(&c5);
  REQUIRE(path != nullptr);
  CHECK(path->path.vertices == std::vector<int>({0, 1, 2, 3}));
}

TEST_CASE("color_from_start input validation") {
  CHECK_THROWS_AS(color_from_start(complete_graph(3), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(color_from_start(Graph::from_edge_list(4, {{0, 1}, {2, 3}}), 0, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(color_from_start(complete_graph(3), 7, 4), std::invalid_argument);
}

TEST_CASE("color_excluding_start spec examples") {
  // an edge is an induced P_2 from its endpoint
  auto k2 = color_excluding_start(complete_graph(2), 0, 2);
  auto* path = std::get_if<PathFromV>(&k2);
  REQUIRE(path != nullptr);
  CHECK(path->path.vertices == std::vector<int>({0, 1}));

  // star with center v: three leaves, one color
  Graph star = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}});
  auto got = color_excluding_start(star, 0, 3);
  auto* plain = std::get_if<PlainColoring>(&got);
  REQUIRE(plain != nullptr);
  CHECK(plain->coloring.colors_used() == 1);
  CHECK_FALSE(plain->coloring.assigned(0));

  // K_3 from vertex 0: two colors on the others plus the triangle
  auto k3 = color_excluding_start(complete_graph(3), 0, 3);
  auto* with_tri = std::get_if<ColoringWithTriangle>(&k3);
  REQUIRE(with_tri != nullptr);
  CHECK(with_tri->coloring.color[1] == 1);
  CHECK(with_tri->coloring.color[2] == 2);
  CHECK(with_tri->triangle.vertices == std::array<int, 3>{0, 1, 2});

  // t=1 always has the one-vertex path
  auto p1 = color_excluding_start(complete_graph(3), 1, 1);
  auto* single = std::get_if<PathFromV>(&p1);
  REQUIRE(single != nullptr);
  CHECK(single->path.vertices == std::vector<int>({1}));
}

TEST_CASE("start colorer is sound on random connected graphs") {
  for (uint64_t seed = 0; seed < 120; ++seed) {
    int n = 2 + static_cast<int>(seed % 7);
    Graph g = random_connected_graph(n, 0.35, 11000 + seed);
    for (int t = 2; t <= 7; ++t) {
      for (int v = 0; v < n; ++v) {
        check_outcome_sound(g, v, t, false, color_from_start(g, v, t));
        check_outcome_sound(g, v, t, true, color_excluding_start(g, v, t));
      }
    }
  }
}

TEST_CASE("certificates exceeding the cap carry the oversized flag") {
  // wheel over C_9: the odd rim plus the hub is the certificate
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 9; ++i) {
    edges.emplace_back(i, (i + 1) % 9);
    edges.emplace_back(9, i);
  }
  Graph wheel = Graph::from_edge_list(10, edges);
  StartOptions tight;
  tight.certificate_cap = 4;
  auto out = color_from_start(wheel, 9, 6, tight);
  auto* refuted = std::get_if<NotThreeColorable>(&out);
  REQUIRE(refuted != nullptr);
  auto* small = std::get_if<SmallSubgraphRefutation>(&refuted->refutation);
  REQUIRE(small != nullptr);
  CHECK(small->oversized);
  CHECK(verify_refutation(wheel, refuted->refutation));
}
