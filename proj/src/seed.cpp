#include "ptcolor/seed.hpp"

#include <algorithm>
#include <climits>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>

#include "internal.hpp"
#include "ptcolor/closure.hpp"
#include "ptcolor/oracles.hpp"

namespace ptcolor {

namespace {

using detail::overlay_compacted;
using detail::to_parent_ids;
using detail::translate_path;
using detail::translate_refutation;
using detail::translate_triangle;

// ceil((t-1)/2) and ceil((t-2)/2) in integer arithmetic
int half_up_minus1(int t) { return t / 2; }
int half_up_minus2(int t) { return (t - 1) / 2; }

struct Splice {
  // reversed head path, connector vertices, tail path; concatenated in order
  std::vector<int> vertices;
};

// Multi-source BFS from `sources` to `target` inside the vertex set `within`.
// Returns the path segment after leaving the source set: (x, ..., target),
// where x is the single path vertex adjacent to the sources.
std::vector<int> escape_segment(const Graph& g, const std::vector<int>& sources, int target,
                                const std::vector<char>& within) {
  std::vector<int> parent(g.num_vertices(), -2);
  std::queue<int> q;
  for (int s : sources) {
    parent[s] = -1;
    q.push(s);
  }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (u == target) break;
    for (int w : g.neighbors(u)) {
      if (!within[w] || parent[w] != -2) continue;
      parent[w] = u;
      q.push(w);
    }
  }
  if (parent[target] == -2) throw std::logic_error("escape segment: target unreachable");
  std::vector<int> path;
  for (int u = target; u != -1; u = parent[u]) path.push_back(u);
  std::reverse(path.begin(), path.end());
  // drop the source endpoint; everything after it lies outside the source set
  path.erase(path.begin());
  if (path.empty()) throw std::logic_error("escape segment: target inside source set");
  return path;
}

struct SeedContext {
  const Graph& g;
  int t;
  StartOptions opts;

  SeedOutcome run(int v, int k);

 private:
  SeedOutcome delegate(int v, int k);
  SeedOutcome full(int v, int k);
  SeedOutcome assemble(std::vector<int> seed, std::vector<int> acc,
                       std::optional<TriangleWitness> triangle);
};

SeedOutcome SeedContext::run(int v, int k) {
  if (connected_components(g).size() > 1) {
    throw std::logic_error("find_seed recursion produced a disconnected subgraph");
  }
  if (k <= std::max(3, half_up_minus1(t))) return delegate(v, k);
  return full(v, k);
}

// Wraps the base colorer with S = {v}; F({v}) = {v}, so the remainder is
// exactly G - ({v} + N(v)).
SeedOutcome SeedContext::delegate(int v, int k) {
  auto out = color_excluding_start(g, v, k, opts);
  if (auto* refuted = std::get_if<NotThreeColorable>(&out)) return std::move(*refuted);
  if (auto* path = std::get_if<PathFromV>(&out)) return std::move(*path);

  std::vector<int> acc(g.num_vertices(), 0);
  std::optional<TriangleWitness> triangle;
  if (auto* plain = std::get_if<PlainColoring>(&out)) {
    overlay_compacted(plain->coloring, detail::identity_map(g.num_vertices()), acc);
  } else {
    auto& with_tri = std::get<ColoringWithTriangle>(out);
    overlay_compacted(with_tri.coloring, detail::identity_map(g.num_vertices()), acc);
    triangle = with_tri.triangle;
  }
  return assemble({v}, std::move(acc), triangle);
}

// Computes the closure of the final seed set, restricts the accumulated
// coloring to the frontier complement, and packages the result.
SeedOutcome SeedContext::assemble(std::vector<int> seed, std::vector<int> acc,
                                  std::optional<TriangleWitness> triangle) {
  std::sort(seed.begin(), seed.end());
  auto cr = closure_F(g, seed);
  std::vector<char> in_frontier(g.num_vertices(), 0);
  for (int u : cr.frontier) in_frontier[u] = 1;

  std::vector<int> restricted(g.num_vertices(), 0);
  for (int u = 0; u < g.num_vertices(); ++u) {
    if (in_frontier[u]) continue;
    if (acc[u] == 0) {
      throw std::logic_error("vertex outside the frontier was never colored");
    }
    restricted[u] = acc[u];
  }

  SeedResult res;
  res.seed_set = std::move(seed);
  res.frontier = cr.frontier;
  res.triangle = triangle;
  res.palette_bound = seed_palette_bound(t, triangle.has_value());
  Coloring compacted;
  compacted.color.assign(g.num_vertices(), 0);
  compacted.palette_size = res.palette_bound;
  int used = overlay_compacted(Coloring{std::move(restricted), g.num_vertices()},
                               detail::identity_map(g.num_vertices()), compacted.color);
  if (used > res.palette_bound) {
    throw std::logic_error("seed remainder exceeds its palette bound");
  }
  res.remainder = std::move(compacted);
  return res;
}

SeedOutcome SeedContext::full(int v, int k) {
  const int n = g.num_vertices();
  const int phase1_param = half_up_minus1(t);
  const int phase2_param = half_up_minus2(t);
  const auto& nv = g.neighbors(v);

  if (nv.empty()) {
    // connected, so G is a single vertex
    return assemble({v}, std::vector<int>(n, 0), std::nullopt);
  }

  std::vector<char> in_nv(n, 0);
  for (int w : nv) in_nv[w] = 1;
  std::vector<int> zset;
  for (int u = 0; u < n; ++u) {
    if (u != v && !in_nv[u]) zset.push_back(u);
  }
  auto comps = connected_components(g, zset);
  auto anchors = connected_components(g, nv);
  const int nc = static_cast<int>(comps.size());
  const int na = static_cast<int>(anchors.size());

  std::vector<int> comp_of(n, -1), anchor_of(n, -1);
  for (int i = 0; i < nc; ++i) {
    for (int u : comps[i]) comp_of[u] = i;
  }
  for (int a = 0; a < na; ++a) {
    for (int u : anchors[a]) anchor_of[u] = a;
  }
  std::vector<std::set<int>> comp_anchors(nc);
  for (int i = 0; i < nc; ++i) {
    for (int u : comps[i]) {
      for (int w : g.neighbors(u)) {
        if (anchor_of[w] >= 0) comp_anchors[i].insert(anchor_of[w]);
      }
    }
  }

  std::vector<int> acc(n, 0);
  std::optional<TriangleWitness> triangle;
  std::vector<char> comp_colored(nc, 0);
  std::vector<char> anchor_deleted(na, 0), anchor_processed(na, 0);

  struct KeptPath {
    int anchor;
    PathWitness path;  // starts at the attachment vertex, interior in its comp
    int comp;
  };
  std::vector<KeptPath> kept;

  auto record_coloring = [&](const StartOutcome& out, const std::vector<int>& map) {
    if (const auto* plain = std::get_if<PlainColoring>(&out)) {
      overlay_compacted(plain->coloring, map, acc);
    } else {
      const auto& with_tri = std::get<ColoringWithTriangle>(out);
      overlay_compacted(with_tri.coloring, map, acc);
      if (!triangle) triangle = translate_triangle(with_tri.triangle, map);
    }
  };

  // ---------- phase 1: pair components of Z against components of N(v) ----------
  int dominating = -1;
  while (true) {
    // exit once one anchor component reaches every uncolored component
    std::vector<int> cover(na, 0);
    int uncolored = 0;
    for (int i = 0; i < nc; ++i) {
      if (comp_colored[i]) continue;
      ++uncolored;
      for (int a : comp_anchors[i]) ++cover[a];
    }
    int best = 0;
    for (int a = 1; a < na; ++a) {
      if (cover[a] > cover[best]) best = a;
    }
    if (cover[best] == uncolored) {
      dominating = best;
      break;
    }

    int j = -1;
    for (int a = 0; a < na; ++a) {
      if (!anchor_processed[a]) {
        j = a;
        break;
      }
    }
    if (j < 0) throw std::logic_error("phase 1 exhausted anchors without domination");

    for (int i = 0; i < nc; ++i) {
      if (comp_colored[i]) continue;
      if (!comp_anchors[i].count(j)) continue;
      bool exclusive = true;
      for (int a : comp_anchors[i]) {
        if (a != j && !anchor_deleted[a]) {
          exclusive = false;
          break;
        }
      }
      if (!exclusive) continue;
      bool already_pathed = false;
      for (const auto& kp : kept) {
        if (kp.comp == i) already_pathed = true;
      }
      if (already_pathed) continue;

      int attach = INT_MAX;
      for (int u : anchors[j]) {
        if (attach != INT_MAX) break;
        for (int w : g.neighbors(u)) {
          if (comp_of[w] == i) {
            attach = u;
            break;
          }
        }
      }
      if (attach == INT_MAX) throw std::logic_error("exclusive component misses its anchor");

      std::vector<int> verts(comps[i]);
      verts.insert(std::lower_bound(verts.begin(), verts.end(), attach), attach);
      auto sub = induced_subgraph(g, verts);
      int local = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), attach) -
                                   verts.begin());
      auto out = color_excluding_start(sub.graph, local, phase1_param, opts);
      if (auto* refuted = std::get_if<NotThreeColorable>(&out)) {
        return NotThreeColorable{translate_refutation(refuted->refutation, sub.to_parent)};
      }
      if (auto* path = std::get_if<PathFromV>(&out)) {
        bool anchor_has_path = false;
        for (const auto& kp : kept) {
          if (kp.anchor == j) anchor_has_path = true;
        }
        if (!anchor_has_path) {
          kept.push_back({j, translate_path(path->path, sub.to_parent), i});
        }
        if (kept.size() == 2) {
          // two anchor components kept a path each; splice through x v x'
          std::vector<int> cand(kept[0].path.vertices.rbegin(), kept[0].path.vertices.rend());
          cand.push_back(v);
          for (int u : kept[1].path.vertices) cand.push_back(u);
          cand.resize(t);
          PathWitness witness{std::move(cand)};
          if (!verify_path(g, witness, t)) {
            throw std::logic_error("phase 1 splice produced a non-induced path");
          }
          return InducedPt{std::move(witness)};
        }
        continue;
      }
      record_coloring(out, sub.to_parent);
      comp_colored[i] = 1;
    }
    anchor_processed[j] = 1;
    bool anchor_has_path = false;
    for (const auto& kp : kept) {
      if (kp.anchor == j) anchor_has_path = true;
    }
    if (!anchor_has_path) anchor_deleted[j] = 1;
  }

  // ---------- phase 2: escape components of bad components against D ----------
  const auto& dom = anchors[dominating];
  std::vector<char> in_dom(n, 0), in_ndom(n, 0);
  for (int u : dom) in_dom[u] = 1;
  for (int u : dom) {
    for (int w : g.neighbors(u)) in_ndom[w] = 1;
  }

  std::vector<char> comp_bad(nc, 0);
  std::vector<std::vector<std::vector<int>>> escapes(nc);
  std::vector<std::vector<char>> escape_colored(nc);
  for (int i = 0; i < nc; ++i) {
    if (comp_colored[i]) continue;
    std::vector<int> outside;
    for (int u : comps[i]) {
      if (!in_ndom[u]) outside.push_back(u);
    }
    if (outside.empty()) continue;  // good: contained in N(D)
    comp_bad[i] = 1;
    escapes[i] = connected_components(g, outside);
    escape_colored[i].assign(escapes[i].size(), 0);
  }

  auto active_bad = [&]() {
    std::vector<int> out;
    for (int i = 0; i < nc; ++i) {
      if (!comp_bad[i]) continue;
      for (size_t e = 0; e < escapes[i].size(); ++e) {
        if (!escape_colored[i][e]) {
          out.push_back(i);
          break;
        }
      }
    }
    return out;
  };

  int root = -1;
  std::vector<int> recursion_comps;
  while (true) {
    auto bad = active_bad();
    if (bad.empty()) {
      root = dom.front();
      break;
    }
    // adjacency of D vertices to active bad components (any vertex counts,
    // the whole component joins the recursion set)
    std::vector<char> is_bad(nc, 0);
    for (int i : bad) is_bad[i] = 1;
    int best_y = -1, best_cover = -1;
    std::vector<char> best_adj(nc, 0);
    for (int y : dom) {
      std::vector<char> adj(nc, 0);
      int cover = 0;
      for (int w : g.neighbors(y)) {
        int i = comp_of[w];
        if (i >= 0 && is_bad[i] && !adj[i]) {
          adj[i] = 1;
          ++cover;
        }
      }
      if (cover > best_cover) {
        best_cover = cover;
        best_y = y;
        best_adj = adj;
      }
    }
    if (best_cover == static_cast<int>(bad.size())) {
      root = best_y;
      recursion_comps = bad;
      break;
    }

    // Lemma-style pairing: y reaches C but not C', y' reaches C' but not C
    int y = best_y;
    int cp = -1;
    for (int i : bad) {
      if (!best_adj[i]) {
        cp = i;
        break;
      }
    }
    if (cp < 0) throw std::logic_error("phase 2 pairing: no unreached bad component");
    int yp = -1;
    for (int u : dom) {
      if (yp != -1) break;
      for (int w : g.neighbors(u)) {
        if (comp_of[w] == cp) {
          yp = u;
          break;
        }
      }
    }
    if (yp < 0) throw std::logic_error("phase 2 pairing: C' not adjacent to D");
    std::vector<char> yp_adj(nc, 0);
    for (int w : g.neighbors(yp)) {
      if (comp_of[w] >= 0) yp_adj[comp_of[w]] = 1;
    }
    int c = -1;
    for (int i : bad) {
      if (best_adj[i] && !yp_adj[i]) {
        c = i;
        break;
      }
    }
    if (c < 0) throw std::logic_error("phase 2 pairing: maximality violated");

    auto first_open_escape = [&](int i) -> int {
      for (size_t e = 0; e < escapes[i].size(); ++e) {
        if (!escape_colored[i][e]) return static_cast<int>(e);
      }
      return -1;
    };
    int ei = first_open_escape(c), epi = first_open_escape(cp);
    if (ei < 0 || epi < 0) throw std::logic_error("active bad component without open escape");
    const auto& esc = escapes[c][ei];
    const auto& escp = escapes[cp][epi];

    std::vector<char> within(n, 0);
    for (int u : comps[c]) within[u] = 1;
    within[y] = 1;
    auto seg = escape_segment(g, esc, y, within);
    std::fill(within.begin(), within.end(), 0);
    for (int u : comps[cp]) within[u] = 1;
    within[yp] = 1;
    auto segp = escape_segment(g, escp, yp, within);

    int x = seg.front(), xp = segp.front();
    auto call = [&](const std::vector<int>& escape, int attach)
        -> std::pair<StartOutcome, std::vector<int>> {
      std::vector<int> verts(escape);
      verts.insert(std::lower_bound(verts.begin(), verts.end(), attach), attach);
      auto sub = induced_subgraph(g, verts);
      int local = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), attach) -
                                   verts.begin());
      return {color_excluding_start(sub.graph, local, phase2_param, opts), sub.to_parent};
    };
    auto [out1, map1] = call(esc, x);
    if (auto* refuted = std::get_if<NotThreeColorable>(&out1)) {
      return NotThreeColorable{translate_refutation(refuted->refutation, map1)};
    }
    auto [out2, map2] = call(escp, xp);
    if (auto* refuted = std::get_if<NotThreeColorable>(&out2)) {
      return NotThreeColorable{translate_refutation(refuted->refutation, map2)};
    }

    auto* path1 = std::get_if<PathFromV>(&out1);
    auto* path2 = std::get_if<PathFromV>(&out2);
    if (path1 && path2) {
      auto p1 = translate_path(path1->path, map1);
      auto p2 = translate_path(path2->path, map2);
      // candidate: E-deep..x, x..y segment, [v], y'..x' segment, x'..E'-deep
      std::vector<int> cand(p1.vertices.rbegin(), p1.vertices.rend());
      cand.insert(cand.end(), seg.begin() + 1, seg.end());
      if (!g.has_edge(y, yp)) cand.push_back(v);
      cand.insert(cand.end(), segp.rbegin(), segp.rend());
      cand.insert(cand.end(), p2.vertices.begin() + 1, p2.vertices.end());
      if (static_cast<int>(cand.size()) < t) {
        throw std::logic_error("phase 2 splice shorter than t");
      }
      cand.resize(t);
      PathWitness witness{std::move(cand)};
      if (!verify_path(g, witness, t)) {
        // fall back to an exhaustive search inside the involved vertex sets
        std::vector<int> pool(esc);
        pool.insert(pool.end(), escp.begin(), escp.end());
        pool.insert(pool.end(), seg.begin(), seg.end());
        pool.insert(pool.end(), segp.begin(), segp.end());
        pool.push_back(v);
        std::sort(pool.begin(), pool.end());
        pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
        auto sub = induced_subgraph(g, pool);
        auto found = find_induced_path(sub.graph, t, std::nullopt,
                                       static_cast<int>(pool.size()));
        if (!found) throw std::logic_error("phase 2 splice failed and no fallback path exists");
        witness = translate_path(*found, sub.to_parent);
      }
      return InducedPt{std::move(witness)};
    }

    bool progressed = false;
    if (!path1) {
      record_coloring(out1, map1);
      escape_colored[c][ei] = 1;
      progressed = true;
    }
    if (!path2) {
      record_coloring(out2, map2);
      escape_colored[cp][epi] = 1;
      progressed = true;
    }
    if (!progressed) throw std::logic_error("phase 2 iteration made no progress");
  }

  // ---------- recursion on the surviving vertex ----------
  std::vector<int> verts({root});
  for (int i : recursion_comps) {
    verts.insert(verts.end(), comps[i].begin(), comps[i].end());
    for (int u : comps[i]) acc[u] = 0;  // recursion supersedes partial escape colorings
  }
  std::sort(verts.begin(), verts.end());
  auto sub = induced_subgraph(g, verts);
  int local_root =
      static_cast<int>(std::lower_bound(verts.begin(), verts.end(), root) - verts.begin());
  auto rec = SeedContext{sub.graph, t, opts}.run(local_root, k - 1);

  if (auto* refuted = std::get_if<NotThreeColorable>(&rec)) {
    return NotThreeColorable{translate_refutation(refuted->refutation, sub.to_parent)};
  }
  if (auto* pt = std::get_if<InducedPt>(&rec)) {
    return InducedPt{translate_path(pt->path, sub.to_parent)};
  }
  if (auto* path = std::get_if<PathFromV>(&rec)) {
    std::vector<int> full({v});
    for (int u : path->path.vertices) full.push_back(sub.to_parent[u]);
    return PathFromV{PathWitness{std::move(full)}};
  }

  auto& sr = std::get<SeedResult>(rec);
  std::vector<int> seed({v});
  for (int u : sr.seed_set) seed.push_back(sub.to_parent[u]);
  overlay_compacted(sr.remainder, sub.to_parent, acc);
  if (!triangle && sr.triangle) triangle = translate_triangle(*sr.triangle, sub.to_parent);
  return assemble(std::move(seed), std::move(acc), triangle);
}

void check_seed_outcome(const Graph& g, int v, int k, int t, const SeedOutcome& out) {
  if (const auto* pt = std::get_if<InducedPt>(&out)) {
    if (!verify_path(g, pt->path, t)) {
      throw std::logic_error("find_seed produced an invalid induced path");
    }
    return;
  }
  if (const auto* path = std::get_if<PathFromV>(&out)) {
    if (!verify_path(g, path->path, k, v)) {
      throw std::logic_error("find_seed produced an invalid rooted path");
    }
    return;
  }
  const auto* sr = std::get_if<SeedResult>(&out);
  if (!sr) return;
  if (std::find(sr->seed_set.begin(), sr->seed_set.end(), v) == sr->seed_set.end()) {
    throw std::logic_error("seed set does not contain the root");
  }
  if (static_cast<int>(sr->seed_set.size()) > std::max(1, k - 2)) {
    throw std::logic_error("seed set larger than max(1, k-2)");
  }
  if (sr->palette_bound != seed_palette_bound(t, sr->triangle.has_value())) {
    throw std::logic_error("seed palette bound mismatch");
  }
  if (sr->triangle && !verify_triangle(g, *sr->triangle)) {
    throw std::logic_error("seed triangle witness invalid");
  }
  std::vector<char> in_frontier(g.num_vertices(), 0);
  for (int u : sr->frontier) in_frontier[u] = 1;
  for (int u = 0; u < g.num_vertices(); ++u) {
    if (in_frontier[u] == sr->remainder.assigned(u)) {
      throw std::logic_error("seed remainder domain is not the frontier complement");
    }
  }
  if (!verify_coloring(g, sr->remainder) || sr->remainder.colors_used() > sr->palette_bound) {
    throw std::logic_error("seed remainder coloring invalid");
  }
}

}  // namespace

int seed_palette_bound(int t, bool triangle) {
  int half = half_up_minus1(t);
  return triangle ? std::max(2, 2 * half - 5) : std::max(1, half - 2);
}

SeedOutcome find_seed(const Graph& g, int v, int k, int t, const StartOptions& opts) {
  if (k < 1) throw std::invalid_argument("find_seed requires k >= 1");
  if (t < 2) throw std::invalid_argument("find_seed requires t >= 2");
  if (v < 0 || v >= g.num_vertices()) throw std::invalid_argument("find_seed: root out of range");
  if (connected_components(g).size() > 1) {
    throw std::invalid_argument("find_seed: input graph must be connected");
  }
  const bool clamped = k > t;
  const int effective_k = std::min(k, t);
  SeedOutcome out = SeedContext{g, t, opts}.run(v, effective_k);
  if (clamped) {
    // a P_k from v for the clamped k is an induced P_t
    if (auto* path = std::get_if<PathFromV>(&out)) {
      out = InducedPt{std::move(path->path)};
    }
  }
  check_seed_outcome(g, v, effective_k, t, out);
  return out;
}

}  // namespace ptcolor
