#include "ptcolor/start_color.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "internal.hpp"

namespace ptcolor {

namespace {

using detail::make_small_refutation;
using detail::overlay_compacted;
using detail::translate_refutation;

int plain_bound(int t, bool excluding) {
  return excluding ? std::max(1, t - 2) : std::max(2, t - 2);
}

int triangle_bound(int t, bool excluding) {
  return excluding ? std::max(2, 2 * t - 5) : std::max(3, 2 * t - 5);
}

Coloring finish_coloring(std::vector<int> colors, int palette) {
  Coloring c;
  c.color = std::move(colors);
  c.palette_size = palette;
  return c;
}

void check_start_outcome(const Graph& g, int v, int t, bool excluding, const StartOutcome& out) {
  if (const auto* path = std::get_if<PathFromV>(&out)) {
    if (!verify_path(g, path->path, t, v)) {
      throw std::logic_error("base colorer produced an invalid path witness");
    }
    return;
  }
  const Coloring* col = nullptr;
  int limit = 0;
  if (const auto* plain = std::get_if<PlainColoring>(&out)) {
    col = &plain->coloring;
    limit = plain_bound(t, excluding);
  } else if (const auto* with_tri = std::get_if<ColoringWithTriangle>(&out)) {
    col = &with_tri->coloring;
    limit = triangle_bound(t, excluding);
    if (!verify_triangle(g, with_tri->triangle)) {
      throw std::logic_error("base colorer produced an invalid triangle witness");
    }
  } else {
    return;  // certificate soundness is established by construction, replayed in tests
  }
  for (int u = 0; u < g.num_vertices(); ++u) {
    bool should = !(excluding && u == v);
    if (should != col->assigned(u)) {
      throw std::logic_error("base colorer coloring has the wrong domain");
    }
  }
  if (!verify_coloring(g, *col) || col->colors_used() > limit) {
    throw std::logic_error("base colorer coloring violates its palette bound");
  }
}

// t <= 4: the exact structural analysis around v. The induced-path check is
// exact for these t, so a returned coloring really certifies that no P_t
// starts at v.
StartOutcome base_case(const Graph& g, int v, int t, const StartOptions& opts) {
  const int n = g.num_vertices();
  if (t == 2) {
    if (g.degree(v) > 0) return PathFromV{PathWitness{{v, g.neighbors(v).front()}}};
    std::vector<int> acc(n, 0);
    acc[v] = 1;
    return PlainColoring{finish_coloring(std::move(acc), plain_bound(t, false))};
  }

  std::vector<char> in_nv(n, 0);
  for (int w : g.neighbors(v)) in_nv[w] = 1;
  std::vector<int> zset;
  for (int u = 0; u < n; ++u) {
    if (u != v && !in_nv[u]) zset.push_back(u);
  }

  if (t == 3) {
    for (int w : g.neighbors(v)) {
      for (int z : g.neighbors(w)) {
        if (z != v && !in_nv[z]) return PathFromV{PathWitness{{v, w, z}}};
      }
    }
    // no induced P_3 from v, hence Z is empty in a connected graph
  }

  auto comps = connected_components(g, zset);
  std::vector<int> comp_of(n, -1);
  for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
    for (int u : comps[i]) comp_of[u] = i;
  }

  if (t == 4) {
    // a neighbor of v with a partial component is exactly a P_4 from v
    std::vector<int> cnt(comps.size(), 0);
    for (int w : g.neighbors(v)) {
      std::fill(cnt.begin(), cnt.end(), 0);
      for (int z : g.neighbors(w)) {
        if (comp_of[z] >= 0) ++cnt[comp_of[z]];
      }
      for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
        if (cnt[i] == 0 || cnt[i] == static_cast<int>(comps[i].size())) continue;
        for (int a : comps[i]) {
          if (!g.has_edge(w, a)) continue;
          for (int b : g.neighbors(a)) {
            if (comp_of[b] == i && !g.has_edge(w, b)) {
              return PathFromV{PathWitness{{v, w, a, b}}};
            }
          }
        }
        throw std::logic_error("partial component without a boundary edge");
      }
    }
  }

  // every neighbor of v is now complete or anticomplete to every component
  std::vector<int> acc(n, 0);
  acc[v] = 1;
  for (const auto& comp : comps) {
    if (comp.size() == 1) {
      acc[comp.front()] = 1;
      continue;
    }
    // structural fact: all of comp shares one neighborhood inside N(v)
    std::vector<int> ref_nbrs;
    for (int w : g.neighbors(comp.front())) {
      if (in_nv[w]) ref_nbrs.push_back(w);
    }
    for (int y : comp) {
      std::vector<int> nbrs;
      for (int w : g.neighbors(y)) {
        if (in_nv[w]) nbrs.push_back(w);
      }
      if (nbrs != ref_nbrs) {
        throw std::logic_error("component members disagree on their neighborhood in N(v)");
      }
    }
    auto bp = bipartition_or_odd_cycle(g, comp);
    if (!bp.bipartite) {
      // a neighbor of v complete to the component turns the odd cycle into a
      // wheel, which needs four colors
      std::vector<int> cert(bp.odd_cycle);
      if (ref_nbrs.empty()) throw std::logic_error("component with no attachment to N(v)");
      cert.push_back(ref_nbrs.front());
      return NotThreeColorable{make_small_refutation(std::move(cert), opts.certificate_cap)};
    }
    for (int u : bp.side_a) acc[u] = 1;  // side containing the lowest id
  }

  std::vector<int> gp;
  for (int u = 0; u < n; ++u) {
    if (u != v && acc[u] == 0) gp.push_back(u);
  }
  std::vector<char> in_gp(n, 0);
  for (int u : gp) in_gp[u] = 1;

  int ex = -1, ey = -1;  // first edge of G' in scan order
  for (int u : gp) {
    for (int w : g.neighbors(u)) {
      if (w > u && in_gp[w]) {
        ex = u;
        ey = w;
        break;
      }
    }
    if (ex >= 0) break;
  }

  if (ex < 0) {
    for (int u : gp) acc[u] = 2;
    return PlainColoring{finish_coloring(std::move(acc), plain_bound(t, false))};
  }

  auto bp = bipartition_or_odd_cycle(g, gp);
  if (bp.bipartite) {
    for (int u : bp.side_a) acc[u] = 2;
    for (int u : bp.side_b) acc[u] = 3;
    TriangleWitness tri{};
    if (in_nv[ex] && in_nv[ey]) {
      tri = TriangleWitness{{v, ex, ey}};
    } else {
      int x = in_nv[ex] ? ex : ey;
      int y = in_nv[ex] ? ey : ex;
      if (in_nv[y]) throw std::logic_error("G' edge with both ends outside N(v)");
      // y sits in a non-singleton component whose members are complete to x
      int yp = -1;
      for (int w : g.neighbors(y)) {
        if (comp_of[w] == comp_of[y]) {
          yp = w;
          break;
        }
      }
      if (yp < 0) throw std::logic_error("uncolored component vertex without a component neighbor");
      tri = TriangleWitness{{x, y, yp}};
    }
    return ColoringWithTriangle{finish_coloring(std::move(acc), triangle_bound(t, false)), tri};
  }

  // odd cycle in G': each cycle vertex from Z contributes a component
  // neighbor adjacent to it and both its cycle neighbors, forcing a fourth
  // color once v is added
  std::vector<int> cert({v});
  for (int c : bp.odd_cycle) {
    cert.push_back(c);
    if (!in_nv[c]) {
      for (int w : g.neighbors(c)) {
        if (comp_of[w] == comp_of[c]) {
          cert.push_back(w);
          break;
        }
      }
    }
  }
  return NotThreeColorable{make_small_refutation(std::move(cert), opts.certificate_cap)};
}

// t >= 5: recurse on the components of G - ({v} + N(v)) through their
// attachment vertices with parameter t - 1, then assemble.
StartOutcome recursive_case(const Graph& g, int v, int t, const StartOptions& opts) {
  const int n = g.num_vertices();
  const auto& nv = g.neighbors(v);
  std::vector<int> acc(n, 0);
  if (nv.empty()) {
    acc[v] = 1;
    return PlainColoring{finish_coloring(std::move(acc), plain_bound(t, false))};
  }

  auto bp = bipartition_or_odd_cycle(g, nv);
  if (!bp.bipartite) {
    std::vector<int> cert(bp.odd_cycle);
    cert.push_back(v);
    return NotThreeColorable{make_small_refutation(std::move(cert), opts.certificate_cap)};
  }

  std::vector<char> in_nv(n, 0);
  for (int w : nv) in_nv[w] = 1;

  std::optional<TriangleWitness> triangle;
  for (int u : nv) {
    for (int w : g.neighbors(u)) {
      if (w > u && in_nv[w]) {
        triangle = TriangleWitness{{v, u, w}};
        break;
      }
    }
    if (triangle) break;
  }
  const bool stable = !triangle.has_value();

  std::vector<int> zset;
  for (int u = 0; u < n; ++u) {
    if (u != v && !in_nv[u]) zset.push_back(u);
  }
  int max_component_colors = 0;
  for (const auto& comp : connected_components(g, zset)) {
    int attach = INT_MAX;
    for (int c : comp) {
      for (int w : g.neighbors(c)) {
        if (in_nv[w]) attach = std::min(attach, w);
      }
    }
    if (attach == INT_MAX) throw std::logic_error("component with no neighbor in N(v)");
    std::vector<int> verts(comp);
    verts.insert(std::lower_bound(verts.begin(), verts.end(), attach), attach);
    auto sub = induced_subgraph(g, verts);
    int local_attach =
        static_cast<int>(std::lower_bound(verts.begin(), verts.end(), attach) - verts.begin());
    auto out = color_excluding_start(sub.graph, local_attach, t - 1, opts);

    if (auto* refuted = std::get_if<NotThreeColorable>(&out)) {
      return NotThreeColorable{translate_refutation(refuted->refutation, sub.to_parent)};
    }
    if (auto* path = std::get_if<PathFromV>(&out)) {
      std::vector<int> full({v});
      for (int u : path->path.vertices) full.push_back(sub.to_parent[u]);
      return PathFromV{PathWitness{std::move(full)}};
    }
    if (auto* plain = std::get_if<PlainColoring>(&out)) {
      max_component_colors =
          std::max(max_component_colors, overlay_compacted(plain->coloring, sub.to_parent, acc));
    } else {
      auto& with_tri = std::get<ColoringWithTriangle>(out);
      max_component_colors =
          std::max(max_component_colors, overlay_compacted(with_tri.coloring, sub.to_parent, acc));
      if (!triangle) {
        const auto& tv = with_tri.triangle.vertices;
        triangle = TriangleWitness{{sub.to_parent[tv[0]], sub.to_parent[tv[1]],
                                    sub.to_parent[tv[2]]}};
      }
    }
  }

  // component palettes are shared; N(v) takes one or two fresh colors and v
  // repeats a component color when one exists
  if (!triangle) {
    if (max_component_colors == 0) {
      acc[v] = 1;
      for (int w : nv) acc[w] = 2;
    } else {
      for (int w : nv) acc[w] = max_component_colors + 1;
      acc[v] = 1;
    }
    return PlainColoring{finish_coloring(std::move(acc), plain_bound(t, false))};
  }
  if (stable) {
    if (max_component_colors == 0) {
      throw std::logic_error("triangle without an edge in N(v) requires a component");
    }
    for (int w : nv) acc[w] = max_component_colors + 1;
    acc[v] = 1;
  } else {
    for (int u : bp.side_a) acc[u] = max_component_colors + 1;
    for (int u : bp.side_b) acc[u] = max_component_colors + 2;
    acc[v] = max_component_colors >= 1 ? 1 : max_component_colors + 3;
  }
  return ColoringWithTriangle{finish_coloring(std::move(acc), triangle_bound(t, false)),
                              *triangle};
}

void require_connected(const Graph& g, int v, const char* who) {
  if (v < 0 || v >= g.num_vertices()) {
    throw std::invalid_argument(std::string(who) + ": start vertex out of range");
  }
  if (connected_components(g).size() > 1) {
    throw std::invalid_argument(std::string(who) + ": input graph must be connected");
  }
}

}  // namespace

StartOutcome color_from_start(const Graph& g, int v, int t, const StartOptions& opts) {
  if (t < 2) throw std::invalid_argument("color_from_start requires t >= 2");
  require_connected(g, v, "color_from_start");
  StartOutcome out = t <= 4 ? base_case(g, v, t, opts) : recursive_case(g, v, t, opts);
  check_start_outcome(g, v, t, /*excluding=*/false, out);
  return out;
}

StartOutcome color_excluding_start(const Graph& g, int v, int t, const StartOptions& opts) {
  if (t < 1) throw std::invalid_argument("color_excluding_start requires t >= 1");
  require_connected(g, v, "color_excluding_start");
  const int n = g.num_vertices();

  StartOutcome out{PlainColoring{}};
  if (t == 1) {
    out = PathFromV{PathWitness{{v}}};
  } else if (t == 2) {
    if (g.degree(v) > 0) {
      out = PathFromV{PathWitness{{v, g.neighbors(v).front()}}};
    } else {
      Coloring empty;
      empty.color.assign(n, 0);
      empty.palette_size = plain_bound(t, true);
      out = PlainColoring{std::move(empty)};
    }
  } else if (t == 3) {
    std::vector<char> in_nv(n, 0);
    for (int w : g.neighbors(v)) in_nv[w] = 1;
    int pw = -1, pz = -1;
    for (int w : g.neighbors(v)) {
      for (int z : g.neighbors(w)) {
        if (z != v && !in_nv[z]) {
          pw = w;
          pz = z;
          break;
        }
      }
      if (pw >= 0) break;
    }
    if (pw >= 0) {
      out = PathFromV{PathWitness{{v, pw, pz}}};
    } else {
      // v is adjacent to every other vertex
      std::vector<int> rest;
      for (int u = 0; u < n; ++u) {
        if (u != v) rest.push_back(u);
      }
      int ex = -1, ey = -1;
      for (int u : rest) {
        for (int w : g.neighbors(u)) {
          if (w > u && w != v) {
            ex = u;
            ey = w;
            break;
          }
        }
        if (ex >= 0) break;
      }
      std::vector<int> acc(n, 0);
      if (ex < 0) {
        for (int u : rest) acc[u] = 1;
        out = PlainColoring{finish_coloring(std::move(acc), plain_bound(t, true))};
      } else {
        auto bp = bipartition_or_odd_cycle(g, rest);
        if (bp.bipartite) {
          for (int u : bp.side_a) acc[u] = 1;
          for (int u : bp.side_b) acc[u] = 2;
          out = ColoringWithTriangle{finish_coloring(std::move(acc), triangle_bound(t, true)),
                                     TriangleWitness{{v, ex, ey}}};
        } else {
          std::vector<int> cert(bp.odd_cycle);
          cert.push_back(v);
          out = NotThreeColorable{make_small_refutation(std::move(cert), opts.certificate_cap)};
        }
      }
    }
  } else {
    out = color_from_start(g, v, t, opts);
    const auto identity = detail::identity_map(n);
    if (auto* plain = std::get_if<PlainColoring>(&out)) {
      std::vector<int> acc(n, 0);
      Coloring restricted = plain->coloring;
      restricted.color[v] = 0;
      overlay_compacted(restricted, identity, acc);
      out = PlainColoring{finish_coloring(std::move(acc), plain_bound(t, true))};
    } else if (auto* with_tri = std::get_if<ColoringWithTriangle>(&out)) {
      std::vector<int> acc(n, 0);
      Coloring restricted = with_tri->coloring;
      restricted.color[v] = 0;
      overlay_compacted(restricted, identity, acc);
      out = ColoringWithTriangle{finish_coloring(std::move(acc), triangle_bound(t, true)),
                                 with_tri->triangle};
    }
  }
  check_start_outcome(g, v, t, /*excluding=*/true, out);
  return out;
}

}  // namespace ptcolor
