// Private helpers shared by the colorer implementations.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ptcolor/graph.hpp"
#include "ptcolor/start_color.hpp"

namespace ptcolor::detail {

inline std::vector<int> to_parent_ids(const std::vector<int>& local, const std::vector<int>& map) {
  std::vector<int> out;
  out.reserve(local.size());
  for (int v : local) out.push_back(map[v]);
  return out;
}

inline PathWitness translate_path(const PathWitness& p, const std::vector<int>& map) {
  return PathWitness{to_parent_ids(p.vertices, map)};
}

inline TriangleWitness translate_triangle(const TriangleWitness& t, const std::vector<int>& map) {
  return TriangleWitness{{map[t.vertices[0]], map[t.vertices[1]], map[t.vertices[2]]}};
}

inline SmallSubgraphRefutation make_small_refutation(std::vector<int> vertices, int cap) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  SmallSubgraphRefutation ref;
  ref.oversized = static_cast<int>(vertices.size()) > cap;
  ref.vertices = std::move(vertices);
  return ref;
}

// Only small-subgraph certificates can cross an induced-subgraph boundary; a
// list-exhaustion record is tied to the graph it was produced on.
inline Refutation translate_refutation(const Refutation& ref, const std::vector<int>& map) {
  if (const auto* small = std::get_if<SmallSubgraphRefutation>(&ref)) {
    SmallSubgraphRefutation out;
    out.vertices = to_parent_ids(small->vertices, map);
    std::sort(out.vertices.begin(), out.vertices.end());
    out.oversized = small->oversized;
    return out;
  }
  throw std::logic_error("list-exhaustion certificate cannot be translated across subgraphs");
}

// Writes a subgraph coloring into acc under parent ids, remapped to compact
// colors 1..p in order of first appearance. Returns p.
inline int overlay_compacted(const Coloring& sub_coloring, const std::vector<int>& map,
                             std::vector<int>& acc) {
  std::vector<int> remap(sub_coloring.palette_size + 1, 0);
  int next = 0;
  for (int i = 0; i < static_cast<int>(sub_coloring.color.size()); ++i) {
    int c = sub_coloring.color[i];
    if (c == 0) continue;
    if (c >= static_cast<int>(remap.size())) remap.resize(c + 1, 0);
    if (remap[c] == 0) remap[c] = ++next;
    acc[map[i]] = remap[c];
  }
  return next;
}

inline std::vector<int> identity_map(int n) {
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = i;
  return out;
}

}  // namespace ptcolor::detail
