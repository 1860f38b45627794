// Completing a seed result: enumerate seed assignments, propagate through
// F(S), and solve the remaining 2-list-coloring by reduction to 2-SAT.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ptcolor/closure.hpp"
#include "ptcolor/graph.hpp"

namespace ptcolor {

struct ListInstance {
  std::vector<int> region;               // sorted
  std::map<int, std::vector<int>> lists; // vertex -> allowed colors, size 1..2
  std::map<int, int> fixed;              // colored neighbors outside the region
};

// Proper coloring of G[region] respecting lists and fixed neighbors, or
// nullopt when infeasible. Implication graph + SCC in linear time. Throws
// std::invalid_argument on malformed lists (empty, size > 2, colors outside
// 1..3, or lists not matching the region).
std::optional<Coloring> two_list_color(const Graph& g, const ListInstance& li);

struct FrontierColoring {
  Coloring coloring;  // 3-coloring of F(S) with N(F(S))
  int assignments_tried = 0;
};

// Tries proper 3-assignments of the seeds in lexicographic order; for each,
// propagates through F(S) and list-colors N(F(S)). Returns the first success,
// or nullopt when every assignment is exhausted.
std::optional<FrontierColoring> color_frontier(const Graph& g, const ClosureResult& cr,
                                               const std::vector<int>& seeds);

}  // namespace ptcolor
