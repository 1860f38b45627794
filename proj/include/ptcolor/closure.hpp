// F(S): the closure of a seed set under "a vertex with two adjacent colored
// neighbors has a forced color", plus color propagation through it.
#pragma once

#include <map>
#include <variant>
#include <vector>

#include "ptcolor/graph.hpp"

namespace ptcolor {

struct ClosureEntry {
  int vertex;
  // Lex-smallest adjacent pair already in the set when this vertex entered;
  // -1/-1 for seed vertices.
  int witness_a = -1;
  int witness_b = -1;
};

struct ClosureResult {
  std::vector<int> closure;   // F(S), sorted
  std::vector<int> frontier;  // F(S) together with N(F(S)), sorted
  std::vector<ClosureEntry> order;
};

// Minimal fixed point containing seeds. Vertices are processed in ascending id
// among those currently eligible, so the recorded order is deterministic.
ClosureResult closure_F(const Graph& g, const std::vector<int>& seeds);

struct PropagationConflict {
  int edge_u = -1;  // violating edge inside F(S)
  int edge_v = -1;
  int witness_a = -1;
  int witness_b = -1;
};

using PropagationResult = std::variant<Coloring, PropagationConflict>;

// Assigns the forced color to every non-seed entry of cr.order. Throws
// std::invalid_argument if seed_assignment does not cover exactly the seeds of
// cr or is improper on G[S].
PropagationResult propagate_colors(const Graph& g, const ClosureResult& cr,
                                   const std::map<int, int>& seed_assignment);

}  // namespace ptcolor
