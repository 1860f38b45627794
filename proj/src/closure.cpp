#include "ptcolor/closure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ptcolor {

namespace {

// Lex-smallest adjacent pair among u's neighbors inside F. The pair exists
// whenever u qualified for entry; (-1, -1) otherwise.
std::pair<int, int> smallest_witness_pair(const Graph& g, const std::vector<char>& in_f, int u) {
  std::vector<int> inside;
  for (int w : g.neighbors(u)) {
    if (in_f[w]) inside.push_back(w);
  }
  for (size_t i = 0; i < inside.size(); ++i) {
    for (size_t j = i + 1; j < inside.size(); ++j) {
      if (g.has_edge(inside[i], inside[j])) return {inside[i], inside[j]};
    }
  }
  return {-1, -1};
}

// Whether x (outside F) has a neighbor w inside F with w adjacent to u (also
// inside F); sorted-list intersection with early exit.
bool qualifies_via(const Graph& g, const std::vector<char>& in_f, int x, int u) {
  const auto& nx = g.neighbors(x);
  const auto& nu = g.neighbors(u);
  size_t i = 0, j = 0;
  while (i < nx.size() && j < nu.size()) {
    if (nx[i] == nu[j]) {
      if (in_f[nx[i]]) return true;
      ++i;
      ++j;
    } else if (nx[i] < nu[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

}  // namespace

ClosureResult closure_F(const Graph& g, const std::vector<int>& seeds) {
  const int n = g.num_vertices();
  for (int s : seeds) {
    if (s < 0 || s >= n) throw std::invalid_argument("seed vertex out of range");
  }
  ClosureResult res;
  std::vector<char> in_f(n, 0), pending(n, 0);
  std::set<int> ready;  // qualified outside vertices, popped in ascending id

  std::vector<int> sorted_seeds(seeds);
  std::sort(sorted_seeds.begin(), sorted_seeds.end());
  sorted_seeds.erase(std::unique(sorted_seeds.begin(), sorted_seeds.end()), sorted_seeds.end());

  auto add = [&](int u, int wa, int wb) {
    in_f[u] = 1;
    res.order.push_back({u, wa, wb});
    for (int x : g.neighbors(u)) {
      if (!in_f[x] && !pending[x] && qualifies_via(g, in_f, x, u)) {
        pending[x] = 1;
        ready.insert(x);
      }
    }
  };

  for (int s : sorted_seeds) add(s, -1, -1);
  while (!ready.empty()) {
    int u = *ready.begin();
    ready.erase(ready.begin());
    auto [wa, wb] = smallest_witness_pair(g, in_f, u);
    add(u, wa, wb);
  }

  for (int v = 0; v < n; ++v) {
    if (in_f[v]) res.closure.push_back(v);
  }
  std::vector<char> in_frontier(in_f);
  for (int v : res.closure) {
    for (int w : g.neighbors(v)) in_frontier[w] = 1;
  }
  for (int v = 0; v < n; ++v) {
    if (in_frontier[v]) res.frontier.push_back(v);
  }
  return res;
}

PropagationResult propagate_colors(const Graph& g, const ClosureResult& cr,
                                   const std::map<int, int>& seed_assignment) {
  std::vector<int> seeds;
  for (const auto& e : cr.order) {
    if (e.witness_a < 0) seeds.push_back(e.vertex);
  }
  if (seed_assignment.size() != seeds.size()) {
    throw std::invalid_argument("seed assignment does not cover exactly the seed set");
  }
  for (int s : seeds) {
    auto it = seed_assignment.find(s);
    if (it == seed_assignment.end()) {
      throw std::invalid_argument("seed assignment does not cover exactly the seed set");
    }
    if (it->second < 1 || it->second > 3) {
      throw std::invalid_argument("seed colors must lie in 1..3");
    }
  }
  for (int s : seeds) {
    for (int w : g.neighbors(s)) {
      auto it = seed_assignment.find(w);
      if (it != seed_assignment.end() && it->second == seed_assignment.at(s)) {
        throw std::invalid_argument("seed assignment is improper on G[S]");
      }
    }
  }

  Coloring col;
  col.color.assign(g.num_vertices(), 0);
  col.palette_size = 3;
  for (const auto& entry : cr.order) {
    int forced;
    if (entry.witness_a < 0) {
      forced = seed_assignment.at(entry.vertex);
    } else {
      int ca = col.color[entry.witness_a];
      int cb = col.color[entry.witness_b];
      if (ca == cb) {
        // witnesses are adjacent, so a shared color means an earlier conflict
        // slipped through; kept as a reportable case rather than assumed away
        return PropagationConflict{entry.witness_a, entry.witness_b, entry.witness_a,
                                   entry.witness_b};
      }
      forced = 6 - ca - cb;
    }
    for (int w : g.neighbors(entry.vertex)) {
      if (col.color[w] == forced) {
        return PropagationConflict{entry.vertex, w, entry.witness_a, entry.witness_b};
      }
    }
    col.color[entry.vertex] = forced;
  }
  return col;
}

}  // namespace ptcolor
