#include "ptcolor/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace ptcolor {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  Graph g;
  g.adj_.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(key.first) + ", " +
                                  std::to_string(key.second) + ")");
    }
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  g.m_ = static_cast<int>(seen.size());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < num_vertices(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

int Coloring::colors_used() const {
  std::set<int> distinct;
  for (int c : color) {
    if (c > 0) distinct.insert(c);
  }
  return static_cast<int>(distinct.size());
}

std::vector<int> Coloring::domain() const {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(color.size()); ++v) {
    if (color[v] > 0) out.push_back(v);
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  InducedSubgraph sub;
  sub.to_parent = vertices;
  std::vector<std::pair<int, int>> edges;
  // Two-pointer intersection of each member's neighbor list with the sorted
  // member list keeps this linear in the incident degree sum.
  std::vector<int> local_of(g.num_vertices(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) local_of[vertices[i]] = i;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    for (int w : g.neighbors(vertices[i])) {
      int j = local_of[w];
      if (j > i) edges.emplace_back(i, j);
    }
  }
  sub.graph = Graph::from_edge_list(static_cast<int>(vertices.size()), edges);
  return sub;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<int> all(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) all[v] = v;
  return connected_components(g, all);
}

std::vector<std::vector<int>> connected_components(const Graph& g, const std::vector<int>& within) {
  std::vector<char> in_set(g.num_vertices(), 0), visited(g.num_vertices(), 0);
  for (int v : within) in_set[v] = 1;
  std::vector<std::vector<int>> comps;
  for (int root : within) {
    if (visited[root]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(root);
    visited[root] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(u);
      for (int w : g.neighbors(u)) {
        if (in_set[w] && !visited[w]) {
          visited[w] = 1;
          q.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  // roots are scanned in `within` order; sort by minimum element for a stable
  // contract independent of the caller's ordering
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

BipartitionResult bipartition_or_odd_cycle(const Graph& g, const std::vector<int>& within) {
  BipartitionResult res;
  std::vector<char> in_set(g.num_vertices(), 0);
  for (int v : within) in_set[v] = 1;
  std::vector<int> side(g.num_vertices(), -1), parent(g.num_vertices(), -1),
      depth(g.num_vertices(), -1);

  std::vector<int> order(within);
  std::sort(order.begin(), order.end());
  for (int root : order) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    parent[root] = -1;
    depth[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (!in_set[w]) continue;
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          q.push(w);
        } else if (side[w] == side[u]) {
          // odd cycle through the BFS-tree paths to the lowest common ancestor
          std::vector<int> pu, pw;
          int a = u, b = w;
          while (depth[a] > depth[b]) {
            pu.push_back(a);
            a = parent[a];
          }
          while (depth[b] > depth[a]) {
            pw.push_back(b);
            b = parent[b];
          }
          while (a != b) {
            pu.push_back(a);
            pw.push_back(b);
            a = parent[a];
            b = parent[b];
          }
          pu.push_back(a);  // the LCA
          res.bipartite = false;
          res.odd_cycle = std::move(pu);
          for (auto it = pw.rbegin(); it != pw.rend(); ++it) res.odd_cycle.push_back(*it);
          return res;
        }
      }
    }
  }
  res.bipartite = true;
  for (int v : order) (side[v] == 0 ? res.side_a : res.side_b).push_back(v);
  return res;
}

bool verify_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.color.size()) != g.num_vertices()) return false;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (c.color[v] < 0) return false;
  }
  if (c.colors_used() > c.palette_size) return false;
  for (int u = 0; u < g.num_vertices(); ++u) {
    if (c.color[u] == 0) continue;
    for (int w : g.neighbors(u)) {
      if (w > u && c.color[w] == c.color[u]) return false;
    }
  }
  return true;
}

bool verify_path(const Graph& g, const PathWitness& p, int required_len,
                 std::optional<int> required_start) {
  const auto& vs = p.vertices;
  if (static_cast<int>(vs.size()) != required_len || vs.empty()) return false;
  if (required_start && vs.front() != *required_start) return false;
  std::set<int> distinct(vs.begin(), vs.end());
  if (static_cast<int>(distinct.size()) != required_len) return false;
  for (int v : vs) {
    if (v < 0 || v >= g.num_vertices()) return false;
  }
  for (size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!g.has_edge(vs[i], vs[i + 1])) return false;
  }
  // induced: no chords anywhere
  for (size_t i = 0; i < vs.size(); ++i) {
    for (size_t j = i + 2; j < vs.size(); ++j) {
      if (g.has_edge(vs[i], vs[j])) return false;
    }
  }
  return true;
}

bool verify_triangle(const Graph& g, const TriangleWitness& t) {
  const auto& v = t.vertices;
  for (int x : v) {
    if (x < 0 || x >= g.num_vertices()) return false;
  }
  if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2]) return false;
  return g.has_edge(v[0], v[1]) && g.has_edge(v[1], v[2]) && g.has_edge(v[0], v[2]);
}

}  // namespace ptcolor
