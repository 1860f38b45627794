// Exponential-time ground truth for desk-scale verification: brute-force
// coloring, induced path search, list coloring, NAE-3SAT, and certificate
// replay. Exceeding a cap is an error, never a silent skip.
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ptcolor/finish.hpp"
#include "ptcolor/graph.hpp"
#include "ptcolor/start_color.hpp"

namespace ptcolor {

inline constexpr int kDefaultBruteCap = 24;
inline constexpr int kDefaultListRegionCap = 15;
inline constexpr int kDefaultNaeVarCap = 20;

// Some proper total 3-coloring, or nullopt. Backtracking over vertices in
// descending degree order (ties by id). Throws when |V| exceeds cap.
std::optional<Coloring> brute_three_color(const Graph& g, int cap = kDefaultBruteCap);

// Induced path on exactly t vertices (starting at start when given), found by
// depth-first extension with chord pruning in lexicographic order.
std::optional<PathWitness> find_induced_path(const Graph& g, int t,
                                             std::optional<int> start = std::nullopt,
                                             int cap = kDefaultBruteCap);

std::optional<Coloring> brute_list_color(const Graph& g, const ListInstance& li,
                                         int cap = kDefaultListRegionCap);

// First triangle in lexicographic vertex order, if any.
std::optional<TriangleWitness> find_triangle(const Graph& g);

struct NaeFormula {
  int num_vars = 0;
  // literal = signed 1-based variable index, never 0
  std::vector<std::array<int, 3>> clauses;
};

// Assignment (indexed by 0-based variable) where every clause has both a true
// and a false literal, or nullopt. Exhaustive.
std::optional<std::vector<bool>> nae_solve(const NaeFormula& f, int cap = kDefaultNaeVarCap);

bool nae_evaluate(const NaeFormula& f, const std::vector<bool>& assignment);

// SmallSubgraph: brute-force confirms G[W] is not 3-colorable (subject to
// cap). ListExhaustion: replays the frontier enumeration.
bool verify_refutation(const Graph& g, const Refutation& ref, int cap = kDefaultBruteCap);

}  // namespace ptcolor
