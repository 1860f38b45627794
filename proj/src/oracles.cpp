#include "ptcolor/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ptcolor {

namespace {

[[noreturn]] void cap_exceeded(const std::string& what, int size, int cap) {
  throw std::invalid_argument(what + ": size " + std::to_string(size) + " exceeds cap " +
                              std::to_string(cap));
}

}  // namespace

std::optional<Coloring> brute_three_color(const Graph& g, int cap) {
  const int n = g.num_vertices();
  if (n > cap) cap_exceeded("brute_three_color", n, cap);

  // static first-fail order: descending degree, ties by id
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });

  std::vector<int> color(n, 0);
  // avail[v] = bitmask of colors 1..3 still open given colored neighbors
  std::vector<int> avail(n, 0b111);

  std::vector<std::pair<int, int>> trail;  // (vertex, previous avail) for undo
  auto assign = [&](int v, int c) -> bool {
    color[v] = c;
    for (int w : g.neighbors(v)) {
      if (color[w] == 0) {
        trail.emplace_back(w, avail[w]);
        avail[w] &= ~(1 << (c - 1));
        if (avail[w] == 0) return false;
      }
    }
    return true;
  };

  int pos = 0;
  std::vector<int> tried(n + 1, 0);  // bitmask of colors attempted at each depth
  std::vector<size_t> trail_mark(n + 1, 0);
  trail_mark[0] = 0;
  while (true) {
    if (pos == n) {
      Coloring res;
      res.color = color;
      res.palette_size = 3;
      return res;
    }
    int v = order[pos];
    int candidates = avail[v] & ~tried[pos];
    if (candidates == 0) {
      tried[pos] = 0;
      if (pos == 0) return std::nullopt;
      --pos;
      while (trail.size() > trail_mark[pos]) {
        avail[trail.back().first] = trail.back().second;
        trail.pop_back();
      }
      color[order[pos]] = 0;
      continue;
    }
    int c = std::countr_zero(static_cast<unsigned>(candidates)) + 1;
    tried[pos] |= 1 << (c - 1);
    trail_mark[pos] = trail.size();
    if (assign(v, c)) {
      ++pos;
      tried[pos] = 0;
    } else {
      while (trail.size() > trail_mark[pos]) {
        avail[trail.back().first] = trail.back().second;
        trail.pop_back();
      }
      color[v] = 0;
    }
  }
}

namespace {

bool extend_path(const Graph& g, std::vector<int>& path, std::vector<char>& used, int t,
                 std::optional<PathWitness>& out) {
  if (static_cast<int>(path.size()) == t) {
    out = PathWitness{path};
    return true;
  }
  for (int w : g.neighbors(path.back())) {
    if (used[w]) continue;
    bool chord = false;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      if (g.has_edge(path[i], w)) {
        chord = true;
        break;
      }
    }
    if (chord) continue;
    path.push_back(w);
    used[w] = 1;
    if (extend_path(g, path, used, t, out)) return true;
    used[w] = 0;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<PathWitness> find_induced_path(const Graph& g, int t, std::optional<int> start,
                                             int cap) {
  const int n = g.num_vertices();
  if (n > cap) cap_exceeded("find_induced_path", n, cap);
  if (t < 1 || t > n) return std::nullopt;
  std::vector<char> used(n, 0);
  std::vector<int> path;
  std::optional<PathWitness> out;
  auto try_from = [&](int s) {
    path.assign(1, s);
    std::fill(used.begin(), used.end(), 0);
    used[s] = 1;
    return extend_path(g, path, used, t, out);
  };
  if (start) {
    if (*start < 0 || *start >= n) throw std::invalid_argument("start vertex out of range");
    if (try_from(*start)) return out;
    return std::nullopt;
  }
  for (int s = 0; s < n; ++s) {
    if (try_from(s)) return out;
  }
  return std::nullopt;
}

namespace {

bool extend_list_coloring(const Graph& g, const ListInstance& li, size_t idx,
                          std::vector<int>& color) {
  if (idx == li.region.size()) return true;
  int v = li.region[idx];
  for (int c : li.lists.at(v)) {
    bool ok = true;
    for (int w : g.neighbors(v)) {
      auto fit = li.fixed.find(w);
      if (fit != li.fixed.end() && fit->second == c) {
        ok = false;
        break;
      }
      if (color[w] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    color[v] = c;
    if (extend_list_coloring(g, li, idx + 1, color)) return true;
    color[v] = 0;
  }
  return false;
}

}  // namespace

std::optional<Coloring> brute_list_color(const Graph& g, const ListInstance& li, int cap) {
  if (static_cast<int>(li.region.size()) > cap)
    cap_exceeded("brute_list_color", static_cast<int>(li.region.size()), cap);
  std::vector<int> color(g.num_vertices(), 0);
  if (!extend_list_coloring(g, li, 0, color)) return std::nullopt;
  Coloring res;
  res.color = std::move(color);
  res.palette_size = 3;
  return res;
}

std::optional<TriangleWitness> find_triangle(const Graph& g) {
  for (int u = 0; u < g.num_vertices(); ++u) {
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      for (int w : g.neighbors(v)) {
        if (w <= v) continue;
        if (g.has_edge(u, w)) return TriangleWitness{{u, v, w}};
      }
    }
  }
  return std::nullopt;
}

bool nae_evaluate(const NaeFormula& f, const std::vector<bool>& assignment) {
  for (const auto& clause : f.clauses) {
    bool any_true = false, any_false = false;
    for (int lit : clause) {
      bool val = assignment[std::abs(lit) - 1];
      if (lit < 0) val = !val;
      (val ? any_true : any_false) = true;
    }
    if (!any_true || !any_false) return false;
  }
  return true;
}

std::optional<std::vector<bool>> nae_solve(const NaeFormula& f, int cap) {
  if (f.num_vars > cap) cap_exceeded("nae_solve", f.num_vars, cap);
  for (const auto& clause : f.clauses) {
    for (int lit : clause) {
      if (lit == 0 || std::abs(lit) > f.num_vars)
        throw std::invalid_argument("literal out of range");
    }
  }
  const uint64_t total = 1ull << f.num_vars;
  std::vector<bool> assignment(f.num_vars, false);
  for (uint64_t mask = 0; mask < total; ++mask) {
    for (int i = 0; i < f.num_vars; ++i) assignment[i] = (mask >> i) & 1;
    if (nae_evaluate(f, assignment)) return assignment;
  }
  return std::nullopt;
}

bool verify_refutation(const Graph& g, const Refutation& ref, int cap) {
  if (const auto* small = std::get_if<SmallSubgraphRefutation>(&ref)) {
    std::vector<int> verts(small->vertices);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.empty() || verts.front() < 0 || verts.back() >= g.num_vertices()) return false;
    auto sub = induced_subgraph(g, verts);
    return !brute_three_color(sub.graph, cap).has_value();
  }
  const auto& le = std::get<ListExhaustionRefutation>(ref);
  for (int v : le.seed_set) {
    if (v < 0 || v >= g.num_vertices()) return false;
  }
  auto cr = closure_F(g, le.seed_set);
  if (cr.frontier != le.frontier) return false;
  return !color_frontier(g, cr, le.seed_set).has_value();
}

}  // namespace ptcolor
