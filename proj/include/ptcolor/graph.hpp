// Immutable undirected simple graph plus the witness types and polynomial-time
// verifiers shared by the whole library.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ptcolor {

class Graph {
 public:
  Graph() = default;

  // Builds a canonical graph. Throws std::invalid_argument (with the offending
  // pair) on out-of-range endpoints, self-loops, or duplicate edges.
  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return m_; }

  // Neighbor list sorted ascending.
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  std::vector<std::pair<int, int>> edges() const;

 private:
  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

// Partial coloring: color[v] == 0 means v is outside the domain, colors are
// 1-based. palette_size is the declared upper bound on distinct colors.
struct Coloring {
  std::vector<int> color;
  int palette_size = 0;

  bool assigned(int v) const { return color[v] > 0; }
  int colors_used() const;
  std::vector<int> domain() const;
};

struct PathWitness {
  std::vector<int> vertices;
};

struct TriangleWitness {
  std::array<int, 3> vertices;
};

// Induced subgraph with local ids 0..k-1; to_parent maps back to the host
// graph so witnesses can be reported in original ids.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;
};

// vertices must be sorted ascending and duplicate-free.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

std::vector<std::vector<int>> connected_components(const Graph& g);
// Components of the subgraph induced by `within` (reported in host ids).
std::vector<std::vector<int>> connected_components(const Graph& g, const std::vector<int>& within);

struct BipartitionResult {
  bool bipartite = false;
  std::vector<int> side_a;  // contains the lowest-id vertex of each component
  std::vector<int> side_b;
  std::vector<int> odd_cycle;  // cyclic sequence, consecutive vertices adjacent
};

BipartitionResult bipartition_or_odd_cycle(const Graph& g, const std::vector<int>& within);

bool verify_coloring(const Graph& g, const Coloring& c);
bool verify_path(const Graph& g, const PathWitness& p, int required_len,
                 std::optional<int> required_start = std::nullopt);
bool verify_triangle(const Graph& g, const TriangleWitness& t);

}  // namespace ptcolor
