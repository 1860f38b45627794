#include <stdexcept>
#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "ptcolor/closure.hpp"
#include "ptcolor/oracles.hpp"
#include "test_util.hpp"

using namespace ptcolor;
using namespace ptcolor::testing;

namespace {

// all proper total 3-colorings, for the determination property
std::vector<std::vector<int>> all_three_colorings(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> out;
  std::vector<int> color(n, 1);
  while (true) {
    bool proper = true;
    for (const auto& [u, w] : g.edges()) {
      if (color[u] == color[w]) {
        proper = false;
        break;
      }
    }
    if (proper) out.push_back(color);
    int pos = n - 1;
    while (pos >= 0 && color[pos] == 3) color[pos--] = 1;
    if (pos < 0) break;
    ++color[pos];
  }
  return out;
}

bool outside_vertex_with_inside_pair(const Graph& g, const std::vector<int>& closure) {
  std::set<int> in_f(closure.begin(), closure.end());
  for (int x = 0; x < g.num_vertices(); ++x) {
    if (in_f.count(x)) continue;
    for (int a : g.neighbors(x)) {
      if (!in_f.count(a)) continue;
      for (int b : g.neighbors(x)) {
        if (b > a && in_f.count(b) && g.has_edge(a, b)) return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("closure_F spec examples") {
  // a single vertex has no adjacent pair
  Graph c5 = cycle_graph(5);
  auto single = closure_F(c5, {2});
  CHECK(single.closure == std::vector<int>({2}));
  CHECK(single.frontier == std::vector<int>({1, 2, 3}));

  // K_3 with two seeds pulls in the third vertex
  auto k3 = closure_F(complete_graph(3), {0, 1});
  CHECK(k3.closure == std::vector<int>({0, 1, 2}));
  REQUIRE(k3.order.size() == 3);
  CHECK(k3.order[2].vertex == 2);
  CHECK(k3.order[2].witness_a == 0);
  CHECK(k3.order[2].witness_b == 1);

  // chain of forcings: 2 enters via (0,1), then 3 via (1,2)
  Graph g = Graph::from_edge_list(4, {{0, 1}, {2, 0}, {2, 1}, {3, 1}, {3, 2}});
  auto cr = closure_F(g, {0, 1});
  CHECK(cr.closure == std::vector<int>({0, 1, 2, 3}));
  REQUIRE(cr.order.size() == 4);
  CHECK(cr.order[2].vertex == 2);
  CHECK(cr.order[2].witness_a == 0);
  CHECK(cr.order[2].witness_b == 1);
  CHECK(cr.order[3].vertex == 3);
  CHECK(cr.order[3].witness_a == 1);
  CHECK(cr.order[3].witness_b == 2);
}

TEST_CASE("closure_F is idempotent, monotone, and a fixed point") {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = random_graph(9, 0.3, 4000 + seed);
    SplitMix64 rng(seed);
    int a = static_cast<int>(rng.next_below(9));
    int b = static_cast<int>(rng.next_below(9));
    auto cr = closure_F(g, {a, b});
    CHECK_FALSE(outside_vertex_with_inside_pair(g, cr.closure));
    auto again = closure_F(g, cr.closure);
    CHECK(again.closure == cr.closure);
    auto smaller = closure_F(g, {a});
    CHECK(std::includes(cr.closure.begin(), cr.closure.end(), smaller.closure.begin(),
                        smaller.closure.end()));
    // every non-seed entry has adjacent earlier witnesses
    std::set<int> so_far;
    for (const auto& e : cr.order) {
      if (e.witness_a >= 0) {
        CHECK(so_far.count(e.witness_a) == 1);
        CHECK(so_far.count(e.witness_b) == 1);
        CHECK(g.has_edge(e.witness_a, e.witness_b));
        CHECK(g.has_edge(e.vertex, e.witness_a));
        CHECK(g.has_edge(e.vertex, e.witness_b));
      }
      so_far.insert(e.vertex);
    }
  }
}

TEST_CASE("all proper 3-colorings that agree on S agree on F(S)") {
  for (uint64_t seed = 0; seed < 25; ++seed) {
    Graph g = random_graph(7, 0.35, 5000 + seed);
    auto colorings = all_three_colorings(g);
    for (int a = 0; a < 7; ++a) {
      for (int b = a; b < 7; ++b) {
        auto cr = closure_F(g, a == b ? std::vector<int>{a} : std::vector<int>{a, b});
        std::map<std::pair<int, int>, std::vector<int>> rep;
        for (const auto& col : colorings) {
          auto key = std::make_pair(col[a], col[b]);
          std::vector<int> on_closure;
          for (int u : cr.closure) on_closure.push_back(col[u]);
          auto [it, inserted] = rep.emplace(key, on_closure);
          if (!inserted) CHECK(it->second == on_closure);
        }
      }
    }
  }
}

TEST_CASE("propagate_colors spec examples") {
  Graph k3 = complete_graph(3);
  auto cr3 = closure_F(k3, {0, 1});
  auto res = propagate_colors(k3, cr3, {{0, 1}, {1, 2}});
  auto* col = std::get_if<Coloring>(&res);
  REQUIRE(col != nullptr);
  CHECK(col->color[2] == 3);

  // K_4 forces a conflict on the last vertex
  Graph k4 = complete_graph(4);
  auto cr4 = closure_F(k4, {0, 1});
  auto res4 = propagate_colors(k4, cr4, {{0, 1}, {1, 2}});
  auto* conflict = std::get_if<PropagationConflict>(&res4);
  REQUIRE(conflict != nullptr);
  CHECK(conflict->edge_u == 3);
  CHECK(conflict->edge_v == 2);

  // singleton seed
  Graph single = Graph::from_edge_list(1, {});
  auto cr1 = closure_F(single, {0});
  auto res1 = propagate_colors(single, cr1, {{0, 2}});
  REQUIRE(std::get_if<Coloring>(&res1) != nullptr);
  CHECK(std::get<Coloring>(res1).color[0] == 2);
}

TEST_CASE("propagate_colors rejects bad seed assignments") {
  Graph k3 = complete_graph(3);
  auto cr = closure_F(k3, {0, 1});
  CHECK_THROWS_AS(propagate_colors(k3, cr, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(propagate_colors(k3, cr, {{0, 1}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(propagate_colors(k3, cr, {{0, 1}, {1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(propagate_colors(k3, cr, {{0, 1}, {2, 2}}), std::invalid_argument);
}

TEST_CASE("propagate_colors succeeds iff a 3-coloring of G[F(S)] extends the seeds") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = random_connected_graph(7, 0.3, 6000 + seed);
    auto cr = closure_F(g, {0, 1});
    auto sub = induced_subgraph(g, cr.closure);
    auto sub_colorings = all_three_colorings(sub.graph);
    for (int ca = 1; ca <= 3; ++ca) {
      for (int cb = 1; cb <= 3; ++cb) {
        if (g.has_edge(0, 1) && ca == cb) continue;
        auto res = propagate_colors(g, cr, {{0, ca}, {1, cb}});
        bool extendable = false;
        for (const auto& subcol : sub_colorings) {
          bool match = true;
          for (int i = 0; i < sub.graph.num_vertices(); ++i) {
            if (sub.to_parent[i] == 0 && subcol[i] != ca) match = false;
            if (sub.to_parent[i] == 1 && subcol[i] != cb) match = false;
          }
          if (match) extendable = true;
        }
        auto* col = std::get_if<Coloring>(&res);
        CHECK((col != nullptr) == extendable);
        if (col != nullptr) {
          CHECK(verify_coloring(g, *col));
          CHECK(col->color[0] == ca);
          CHECK(col->color[1] == cb);
        }
      }
    }
  }
}
