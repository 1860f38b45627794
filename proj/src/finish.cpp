#include "ptcolor/finish.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>

namespace ptcolor {

namespace {

// Iterative Tarjan SCC over the implication graph. Returns component ids in
// completion order (reverse topological order of the condensation).
std::vector<int> tarjan_scc(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> comp(n, -1), low(n, 0), num(n, -1), stack_of;
  std::vector<char> on_stack(n, 0);
  int counter = 0, comp_count = 0;
  struct Frame {
    int v;
    size_t edge;
  };
  std::vector<Frame> frames;
  for (int root = 0; root < n; ++root) {
    if (num[root] >= 0) continue;
    frames.push_back({root, 0});
    num[root] = low[root] = counter++;
    stack_of.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, edge] = frames.back();
      if (edge < adj[v].size()) {
        int w = adj[v][edge++];
        if (num[w] < 0) {
          num[w] = low[w] = counter++;
          stack_of.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        if (low[v] == num[v]) {
          while (true) {
            int w = stack_of.back();
            stack_of.pop_back();
            on_stack[w] = 0;
            comp[w] = comp_count;
            if (w == v) break;
          }
          ++comp_count;
        }
        int finished = v;
        frames.pop_back();
        if (!frames.empty()) {
          low[frames.back().v] = std::min(low[frames.back().v], low[finished]);
        }
      }
    }
  }
  return comp;
}

}  // namespace

std::optional<Coloring> two_list_color(const Graph& g, const ListInstance& li) {
  const int n = g.num_vertices();
  if (li.lists.size() != li.region.size()) {
    throw std::invalid_argument("lists must cover exactly the region");
  }
  for (int v : li.region) {
    auto it = li.lists.find(v);
    if (it == li.lists.end()) throw std::invalid_argument("lists must cover exactly the region");
    const auto& list = it->second;
    if (list.empty() || list.size() > 2) {
      throw std::invalid_argument("list of vertex " + std::to_string(v) +
                                  " must have one or two colors");
    }
    for (int c : list) {
      if (c < 1 || c > 3) throw std::invalid_argument("list colors must lie in 1..3");
    }
    if (list.size() == 2 && list[0] == list[1]) {
      throw std::invalid_argument("list of vertex " + std::to_string(v) + " repeats a color");
    }
  }

  std::vector<char> in_region(n, 0);
  for (int v : li.region) in_region[v] = 1;

  // Forced singletons propagate as unit clauses before the 2-SAT stage.
  std::vector<std::vector<int>> lists(n);
  std::vector<int> final_color(n, 0);
  std::deque<int> units;
  for (int v : li.region) {
    lists[v] = li.lists.at(v);
    std::sort(lists[v].begin(), lists[v].end());
    if (lists[v].size() == 1) units.push_back(v);
  }
  while (!units.empty()) {
    int v = units.front();
    units.pop_front();
    if (final_color[v] != 0) continue;
    int c = lists[v][0];
    final_color[v] = c;
    for (int w : g.neighbors(v)) {
      if (!in_region[w]) continue;
      if (final_color[w] == c) return std::nullopt;
      if (final_color[w] != 0) continue;
      auto& lw = lists[w];
      auto pos = std::find(lw.begin(), lw.end(), c);
      if (pos != lw.end()) {
        lw.erase(pos);
        if (lw.empty()) return std::nullopt;
        if (lw.size() == 1) units.push_back(w);
      }
    }
  }

  // Variables for the still-open vertices: false = first list entry, true =
  // second. Node 2i is "var i false", 2i+1 is "var i true".
  std::vector<int> var_of(n, -1);
  std::vector<int> open;
  for (int v : li.region) {
    if (final_color[v] == 0) {
      var_of[v] = static_cast<int>(open.size());
      open.push_back(v);
    }
  }
  std::vector<std::vector<int>> imp(2 * open.size());
  auto node = [&](int v, int entry) { return 2 * var_of[v] + entry; };
  for (int v : open) {
    for (int w : g.neighbors(v)) {
      if (w < v || !in_region[w] || final_color[w] != 0) continue;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          if (lists[v][i] == lists[w][j]) {
            // not both: v@i implies w@!j, w@j implies v@!i
            imp[node(v, i)].push_back(node(w, 1 - j));
            imp[node(w, j)].push_back(node(v, 1 - i));
          }
        }
      }
    }
  }

  auto comp = tarjan_scc(imp);
  for (int v : open) {
    if (comp[node(v, 0)] == comp[node(v, 1)]) return std::nullopt;
    // Tarjan ids rise in completion order, so a smaller id is later in the
    // topological order of the condensation; pick the entry whose component
    // finished earlier.
    final_color[v] = comp[node(v, 0)] < comp[node(v, 1)] ? lists[v][0] : lists[v][1];
  }

  Coloring res;
  res.color = std::move(final_color);
  res.palette_size = 3;
  // final sanity pass against region edges and fixed neighbors
  for (int v : li.region) {
    for (int w : g.neighbors(v)) {
      if (in_region[w] && res.color[w] == res.color[v]) {
        throw std::logic_error("two_list_color produced an improper coloring");
      }
      auto fit = li.fixed.find(w);
      if (fit != li.fixed.end() && fit->second == res.color[v]) {
        throw std::logic_error("two_list_color violated a fixed neighbor");
      }
    }
  }
  return res;
}

std::optional<FrontierColoring> color_frontier(const Graph& g, const ClosureResult& cr,
                                               const std::vector<int>& seeds) {
  std::vector<int> sorted_seeds(seeds);
  std::sort(sorted_seeds.begin(), sorted_seeds.end());
  sorted_seeds.erase(std::unique(sorted_seeds.begin(), sorted_seeds.end()), sorted_seeds.end());
  const int s = static_cast<int>(sorted_seeds.size());

  std::vector<char> in_closure(g.num_vertices(), 0);
  for (int v : cr.closure) in_closure[v] = 1;
  std::vector<int> region;  // N(F(S))
  for (int v : cr.frontier) {
    if (!in_closure[v]) region.push_back(v);
  }

  long long budget = 1;
  for (int i = 0; i < s; ++i) budget *= 3;

  int tried = 0;
  std::vector<int> digits(s, 1);
  while (true) {
    ++tried;
    if (tried > budget) throw std::logic_error("seed enumeration exceeded 3^|S|");

    bool proper = true;
    for (int i = 0; i < s && proper; ++i) {
      for (int j = i + 1; j < s && proper; ++j) {
        if (digits[i] == digits[j] && g.has_edge(sorted_seeds[i], sorted_seeds[j])) proper = false;
      }
    }
    if (proper) {
      std::map<int, int> assignment;
      for (int i = 0; i < s; ++i) assignment[sorted_seeds[i]] = digits[i];
      auto prop = propagate_colors(g, cr, assignment);
      if (auto* col = std::get_if<Coloring>(&prop)) {
        ListInstance li;
        li.region = region;
        bool feasible = true;
        for (int v : region) {
          bool present[4] = {false, false, false, false};
          for (int w : g.neighbors(v)) {
            if (in_closure[w]) present[col->color[w]] = true;
          }
          std::vector<int> list;
          for (int c = 1; c <= 3; ++c) {
            if (!present[c]) list.push_back(c);
          }
          if (list.empty()) {
            feasible = false;
            break;
          }
          if (list.size() == 3) {
            // a frontier vertex always has a colored closure neighbor
            assert(!"region vertex with no colored neighbor");
            list = {1, 2};
          }
          li.lists[v] = list;
        }
        if (feasible) {
          for (int v : cr.closure) li.fixed[v] = col->color[v];
          if (auto region_col = two_list_color(g, li)) {
            FrontierColoring fc;
            fc.coloring.color.assign(g.num_vertices(), 0);
            fc.coloring.palette_size = 3;
            for (int v : cr.closure) fc.coloring.color[v] = col->color[v];
            for (int v : region) fc.coloring.color[v] = region_col->color[v];
            fc.assignments_tried = tried;
            return fc;
          }
        }
      }
    }

    // next assignment in lexicographic order
    int pos = s - 1;
    while (pos >= 0 && digits[pos] == 3) {
      digits[pos] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++digits[pos];
  }
  return std::nullopt;
}

}  // namespace ptcolor
