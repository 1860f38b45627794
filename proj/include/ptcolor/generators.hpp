// Instance generators: the NAE-3SAT hardness gadget, clique joins, and seeded
// families of 3-colorable (optionally P_t-free) graphs.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ptcolor/graph.hpp"
#include "ptcolor/oracles.hpp"

namespace ptcolor {

// splitmix64: tiny seeded generator, identical output on every platform.
struct SplitMix64 {
  uint64_t state = 0;

  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next();
  // uniform in [0, 1)
  double next_double();
  // uniform in [0, n)
  uint64_t next_below(uint64_t n);
};

struct ReductionGraph {
  Graph graph;
  int apex = 0;  // the vertex adjacent to all literal vertices
  // variable i (0-based) -> (vertex of x_{i+1}, vertex of its negation)
  std::vector<std::pair<int, int>> literal_vertices;
  // clause j -> its triangle vertices in literal order
  std::vector<std::array<int, 3>> clause_triangles;
};

// The gadget: apex 0, then literal vertices by variable, then one triangle per
// clause. 1 + 2n + 3m vertices and 3n + 6m edges; 3-colorable iff the formula
// is NAE-satisfiable, and no induced P_5 starts at the apex.
ReductionGraph nae_reduction(const NaeFormula& f);

// G plus a (k-3)-clique complete to V(G); k-colorable iff G is 3-colorable.
// Requires k >= 4.
Graph clique_join(const Graph& g, int k);

// Three near-equal classes (vertex i in class i mod 3), each cross-class pair
// present independently with probability p.
Graph random_3colorable(int n, double p, uint64_t seed);

// Rejection-samples random_3colorable until no induced P_t exists.
std::optional<Graph> random_3colorable_ptfree(int n, int t, double p, uint64_t seed,
                                              int max_tries);

// Complete multipartite graph with consecutive parts.
Graph multipartite(const std::vector<int>& sizes);

}  // namespace ptcolor
