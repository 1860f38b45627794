#include <stdexcept>
#include <variant>

#include "doctest.h"
#include "json.hpp"
#include "ptcolor/driver.hpp"
#include "ptcolor/oracles.hpp"
#include "ptcolor/report.hpp"
#include "test_util.hpp"

using namespace ptcolor;
using namespace ptcolor::testing;

TEST_CASE("bound reproduces the published tables") {
  // triangle present
  CHECK(bound(3, true) == 3);
  CHECK(bound(4, true) == 3);
  CHECK(bound(5, true) == 3);  // the t=5 improvement
  CHECK(bound(6, true) == 5);
  CHECK(bound(7, true) == 5);
  CHECK(bound(8, true) == 6);
  CHECK(bound(9, true) == 6);
  CHECK(bound(10, true) == 8);
  CHECK(bound(11, true) == 8);
  CHECK(bound(13, true) == 10);
  // triangle free
  CHECK(bound(3, false) == 2);
  CHECK(bound(4, false) == 2);
  CHECK(bound(5, false) == 3);
  CHECK(bound(6, false) == 4);
  CHECK(bound(7, false) == 4);
  CHECK(bound(8, false) == 5);
  CHECK(bound(9, false) == 5);
  CHECK(bound(10, false) == 6);
  CHECK(bound(11, false) == 6);
  CHECK_THROWS_AS(bound(2, false), std::invalid_argument);
}

TEST_CASE("approx_color on the octahedron uses three colors and finds a triangle") {
  Graph g = multipartite({2, 2, 2});
  auto res = approx_color(g, 5);
  auto* colored = std::get_if<ColoredResult>(&res);
  REQUIRE(colored != nullptr);
  CHECK(colored->colors_used <= 3);
  REQUIRE(colored->triangle.has_value());
  CHECK(verify_triangle(g, *colored->triangle));
  CHECK(verify_coloring(g, colored->coloring));
}

TEST_CASE("approx_color on the petersen graph stays within the triangle-free bound") {
  Graph g = petersen_graph();
  auto res = approx_color(g, 10);
  auto* colored = std::get_if<ColoredResult>(&res);
  REQUIRE(colored != nullptr);
  CHECK(colored->colors_used <= 6);
  CHECK_FALSE(colored->triangle.has_value());
  CHECK(verify_coloring(g, colored->coloring));
}

TEST_CASE("approx_color refutes K_4") {
  auto res = approx_color(complete_graph(4), 6);
  auto* refuted = std::get_if<NotThreeColorable>(&res);
  REQUIRE(refuted != nullptr);
  CHECK(verify_refutation(complete_graph(4), refuted->refutation));
}

TEST_CASE("approx_color on a long path returns a witness or a small coloring") {
  auto res = approx_color(path_graph(12), 5);
  if (auto* found = std::get_if<FoundPt>(&res)) {
    CHECK(verify_path(path_graph(12), found->path, 5));
  } else {
    auto* colored = std::get_if<ColoredResult>(&res);
    REQUIRE(colored != nullptr);
    CHECK(colored->colors_used <= bound(5, colored->triangle.has_value()));
    CHECK(verify_coloring(path_graph(12), colored->coloring));
  }
}

TEST_CASE("approx_color handles disconnected graphs and reuses palettes") {
  // K_3 plus C_5 plus isolated vertices
  std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {0, 2}};
  for (int i = 0; i < 5; ++i) edges.emplace_back(3 + i, 3 + (i + 1) % 5);
  Graph g = Graph::from_edge_list(10, edges);
  auto res = approx_color(g, 6);
  auto* colored = std::get_if<ColoredResult>(&res);
  REQUIRE(colored != nullptr);
  CHECK(verify_coloring(g, colored->coloring));
  CHECK(colored->colors_used <= 3);
  REQUIRE(colored->triangle.has_value());
}

TEST_CASE("driver results never contradict the oracle on small graphs") {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    int n = 3 + static_cast<int>(seed % 6);
    Graph g = random_graph(n, 0.45, 13000 + seed);
    bool colorable = brute_three_color(g).has_value();
    for (int t = 4; t <= 7; ++t) {
      auto res = approx_color(g, t);
      if (auto* refuted = std::get_if<NotThreeColorable>(&res)) {
        CHECK_FALSE(colorable);
        CHECK(verify_refutation(g, refuted->refutation));
      } else if (auto* found = std::get_if<FoundPt>(&res)) {
        CHECK(verify_path(g, found->path, t));
      } else {
        auto& colored = std::get<ColoredResult>(res);
        CHECK(verify_coloring(g, colored.coloring));
        if (!find_induced_path(g, t).has_value()) {
          CHECK(colored.colors_used <= bound(t, colored.triangle.has_value()));
        }
      }
    }
  }
}

TEST_CASE("driver JSON reports round-trip through the verifier") {
  Graph g = multipartite({2, 2, 2});
  auto res = approx_color(g, 5);
  auto json_text = driver_result_to_json(res, 5, 0.1);
  CHECK(verify_report_against_graph(g, json_text) == "");

  auto refutation = approx_color(complete_graph(4), 6);
  auto json4 = driver_result_to_json(refutation, 6, 0.1);
  CHECK(verify_report_against_graph(complete_graph(4), json4) == "");

  // tampering with one color breaks verification
  auto parsed = nlohmann::json::parse(json_text);
  int old = parsed["coloring"][0].get<int>();
  parsed["coloring"][0] = old == 1 ? 2 : 1;
  CHECK(verify_report_against_graph(g, parsed.dump()) != "");

  // K_4 exhausts the seed enumeration; a tampered frontier no longer replays
  auto parsed4 = nlohmann::json::parse(json4);
  CHECK(parsed4["certificate"]["type"] == "list_exhaustion");
  parsed4["certificate"]["frontier"] = std::vector<int>({0, 1});
  CHECK(verify_report_against_graph(complete_graph(4), parsed4.dump()) != "");

  // a small-subgraph certificate of a colorable set must not verify either
  nlohmann::json fake;
  fake["schema"] = 1;
  fake["status"] = "not_three_colorable";
  fake["t"] = 6;
  fake["bound"] = bound(6, false);
  fake["runtime_ms"] = 0.0;
  fake["certificate"] = {{"type", "small_subgraph"}, {"vertices", {0, 1, 2}}};
  CHECK(verify_report_against_graph(complete_graph(4), fake.dump()) != "");
}

TEST_CASE("root policies change the root, not correctness") {
  Graph g = petersen_graph();
  DriverOptions by_degree;
  by_degree.policy = RootPolicy::MaxDegree;
  DriverOptions fixed;
  fixed.policy = RootPolicy::FixedId;
  fixed.root_id = 7;
  for (const auto& opts : {DriverOptions{}, by_degree, fixed}) {
    auto res = approx_color(g, 8, opts);
    auto* colored = std::get_if<ColoredResult>(&res);
    REQUIRE(colored != nullptr);
    CHECK(verify_coloring(g, colored->coloring));
    CHECK(colored->colors_used <= bound(8, colored->triangle.has_value()));
  }
}
