// The recursive seed-set algorithm: find S with v in S whose closure frontier
// separates the graph from an already-colored remainder, or surface an induced
// P_t / P_k / refutation along the way.
#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "ptcolor/graph.hpp"
#include "ptcolor/start_color.hpp"

namespace ptcolor {

struct SeedResult {
  std::vector<int> seed_set;  // contains the root, |S| <= max(1, k-2)
  std::vector<int> frontier;  // F(S) with N(F(S)), sorted
  // Proper coloring whose domain is exactly V(G) minus the frontier. All
  // separately colored parts share one palette of size <= palette_bound.
  Coloring remainder;
  std::optional<TriangleWitness> triangle;
  int palette_bound = 0;
};

struct InducedPt {
  PathWitness path;  // exactly t vertices, anywhere in the graph
};

using SeedOutcome = std::variant<NotThreeColorable, InducedPt, PathFromV, SeedResult>;

// Connected g, v in V(g), k >= 1, t >= 2. PathFromV carries exactly
// min(k, t) vertices and starts at v; InducedPt carries exactly t.
SeedOutcome find_seed(const Graph& g, int v, int k, int t, const StartOptions& opts = {});

// Palette bound of a SeedResult for parameter t.
int seed_palette_bound(int t, bool triangle);

}  // namespace ptcolor
