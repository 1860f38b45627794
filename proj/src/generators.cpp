#include "ptcolor/generators.hpp"

#include <cmath>
#include <stdexcept>

namespace ptcolor {

uint64_t SplitMix64::next() {
  state += 0x9e3779b97f4a7c15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double SplitMix64::next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

uint64_t SplitMix64::next_below(uint64_t n) { return n == 0 ? 0 : next() % n; }

ReductionGraph nae_reduction(const NaeFormula& f) {
  for (const auto& clause : f.clauses) {
    for (int lit : clause) {
      if (lit == 0 || std::abs(lit) > f.num_vars) {
        throw std::invalid_argument("nae_reduction: literal out of range");
      }
    }
  }
  const int n = f.num_vars;
  const int m = static_cast<int>(f.clauses.size());
  ReductionGraph rg;
  rg.apex = 0;
  auto pos_vertex = [&](int var) { return 1 + 2 * (var - 1); };
  auto neg_vertex = [&](int var) { return 1 + 2 * (var - 1) + 1; };
  for (int i = 1; i <= n; ++i) rg.literal_vertices.emplace_back(pos_vertex(i), neg_vertex(i));

  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) {
    edges.emplace_back(rg.apex, pos_vertex(i));
    edges.emplace_back(rg.apex, neg_vertex(i));
    edges.emplace_back(pos_vertex(i), neg_vertex(i));
  }
  int next_vertex = 1 + 2 * n;
  for (int j = 0; j < m; ++j) {
    std::array<int, 3> tri{next_vertex, next_vertex + 1, next_vertex + 2};
    next_vertex += 3;
    edges.emplace_back(tri[0], tri[1]);
    edges.emplace_back(tri[1], tri[2]);
    edges.emplace_back(tri[0], tri[2]);
    for (int slot = 0; slot < 3; ++slot) {
      int lit = f.clauses[j][slot];
      int lv = lit > 0 ? pos_vertex(lit) : neg_vertex(-lit);
      edges.emplace_back(tri[slot], lv);
    }
    rg.clause_triangles.push_back(tri);
  }
  rg.graph = Graph::from_edge_list(1 + 2 * n + 3 * m, edges);
  return rg;
}

Graph clique_join(const Graph& g, int k) {
  if (k < 4) throw std::invalid_argument("clique_join requires k >= 4");
  const int n = g.num_vertices();
  const int extra = k - 3;
  auto edges = g.edges();
  for (int i = 0; i < extra; ++i) {
    for (int j = i + 1; j < extra; ++j) edges.emplace_back(n + i, n + j);
    for (int u = 0; u < n; ++u) edges.emplace_back(n + i, u);
  }
  return Graph::from_edge_list(n + extra, edges);
}

Graph random_3colorable(int n, double p, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_3colorable requires n >= 1");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("probability must lie in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) {
      if (u % 3 == w % 3) continue;
      if (rng.next_double() < p) edges.emplace_back(u, w);
    }
  }
  return Graph::from_edge_list(n, edges);
}

std::optional<Graph> random_3colorable_ptfree(int n, int t, double p, uint64_t seed,
                                              int max_tries) {
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    Graph g = random_3colorable(n, p, seed + static_cast<uint64_t>(attempt));
    if (!find_induced_path(g, t, std::nullopt, n).has_value()) return g;
  }
  return std::nullopt;
}

Graph multipartite(const std::vector<int>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("multipartite requires at least one part");
  int n = 0;
  for (int s : sizes) {
    if (s < 0) throw std::invalid_argument("part sizes must be non-negative");
    n += s;
  }
  std::vector<int> part_of;
  part_of.reserve(n);
  for (int i = 0; i < static_cast<int>(sizes.size()); ++i) {
    for (int j = 0; j < sizes[i]; ++j) part_of.push_back(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) {
      if (part_of[u] != part_of[w]) edges.emplace_back(u, w);
    }
  }
  return Graph::from_edge_list(n, edges);
}

}  // namespace ptcolor
