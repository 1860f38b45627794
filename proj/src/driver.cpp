#include "ptcolor/driver.hpp"

#include <algorithm>
#include <stdexcept>

#include "internal.hpp"
#include "ptcolor/closure.hpp"
#include "ptcolor/finish.hpp"

namespace ptcolor {

namespace {

using detail::overlay_compacted;
using detail::to_parent_ids;
using detail::translate_path;
using detail::translate_refutation;
using detail::translate_triangle;

int pick_root(const Graph& g, const std::vector<int>& comp, const DriverOptions& opts) {
  if (opts.policy == RootPolicy::FixedId &&
      std::binary_search(comp.begin(), comp.end(), opts.root_id)) {
    return opts.root_id;
  }
  if (opts.policy == RootPolicy::MaxDegree) {
    int best = comp.front();
    for (int u : comp) {
      if (g.degree(u) > g.degree(best)) best = u;
    }
    return best;
  }
  return comp.front();
}

struct ComponentColoring {
  Coloring coloring;  // compact colors over the component's local ids
  std::optional<TriangleWitness> triangle;
};

// Seed route: find_seed with k = t, then three fresh colors on the frontier
// and the remainder palette offset past them.
std::variant<ComponentColoring, FoundPt, NotThreeColorable> seed_route(const Graph& g, int root,
                                                                       int t,
                                                                       const StartOptions& opts) {
  auto outcome = find_seed(g, root, t, t, opts);
  if (auto* refuted = std::get_if<NotThreeColorable>(&outcome)) return std::move(*refuted);
  if (auto* pt = std::get_if<InducedPt>(&outcome)) return FoundPt{std::move(pt->path)};
  if (auto* path = std::get_if<PathFromV>(&outcome)) return FoundPt{std::move(path->path)};

  auto& sr = std::get<SeedResult>(outcome);
  auto cr = closure_F(g, sr.seed_set);
  auto frontier = color_frontier(g, cr, sr.seed_set);
  if (!frontier) {
    return NotThreeColorable{ListExhaustionRefutation{sr.seed_set, cr.frontier}};
  }
  ComponentColoring result;
  result.triangle = sr.triangle;
  result.coloring.color.assign(g.num_vertices(), 0);
  for (int u = 0; u < g.num_vertices(); ++u) {
    if (frontier->coloring.assigned(u)) {
      result.coloring.color[u] = frontier->coloring.color[u];
    } else if (sr.remainder.assigned(u)) {
      result.coloring.color[u] = 3 + sr.remainder.color[u];
    } else {
      throw std::logic_error("frontier and remainder do not cover the component");
    }
  }
  result.coloring.palette_size = 3 + sr.palette_bound;
  return result;
}

Coloring compact(const Coloring& c) {
  Coloring out;
  out.color.assign(c.color.size(), 0);
  out.palette_size = overlay_compacted(c, detail::identity_map(static_cast<int>(c.color.size())),
                                       out.color);
  return out;
}

}  // namespace

int bound(int t, bool triangle) {
  if (t < 3) throw std::invalid_argument("bound requires t >= 3");
  int half = t / 2;  // ceil((t-1)/2)
  if (triangle) {
    if (t == 5) return 3;  // every vertex lands in the frontier, three colors suffice
    return std::min(std::max(3, 2 * t - 5), std::max(5, 2 * half - 2));
  }
  return std::min(std::max(2, t - 2), std::max(4, half + 1));
}

DriverResult approx_color(const Graph& g, int t, const DriverOptions& opts) {
  if (t < 3) throw std::invalid_argument("approx_color requires t >= 3");

  Coloring total;
  total.color.assign(g.num_vertices(), 0);
  int colors_used = 0;
  std::optional<TriangleWitness> triangle;

  for (const auto& comp : connected_components(g)) {
    auto sub = induced_subgraph(g, comp);
    int root = pick_root(g, comp, opts);
    int local_root =
        static_cast<int>(std::lower_bound(comp.begin(), comp.end(), root) - comp.begin());

    auto seeded = seed_route(sub.graph, local_root, t, opts.start);
    if (auto* refuted = std::get_if<NotThreeColorable>(&seeded)) {
      if (auto* le = std::get_if<ListExhaustionRefutation>(&refuted->refutation)) {
        // closure never crosses component boundaries, so the record replays
        // against the full graph after translation
        return NotThreeColorable{ListExhaustionRefutation{
            to_parent_ids(le->seed_set, sub.to_parent), to_parent_ids(le->frontier, sub.to_parent)}};
      }
      return NotThreeColorable{translate_refutation(refuted->refutation, sub.to_parent)};
    }
    if (auto* found = std::get_if<FoundPt>(&seeded)) {
      return FoundPt{translate_path(found->path, sub.to_parent)};
    }
    auto& seed_coloring = std::get<ComponentColoring>(seeded);

    // the base colorer may beat the seed route; refutations always win
    std::optional<ComponentColoring> base_coloring;
    auto base = color_from_start(sub.graph, local_root, t, opts.start);
    if (auto* refuted = std::get_if<NotThreeColorable>(&base)) {
      return NotThreeColorable{translate_refutation(refuted->refutation, sub.to_parent)};
    }
    if (auto* plain = std::get_if<PlainColoring>(&base)) {
      base_coloring = ComponentColoring{std::move(plain->coloring), std::nullopt};
    } else if (auto* with_tri = std::get_if<ColoringWithTriangle>(&base)) {
      base_coloring = ComponentColoring{std::move(with_tri->coloring), with_tri->triangle};
    }
    // a base-colorer path adds nothing once a valid coloring exists

    ComponentColoring* chosen = &seed_coloring;
    if (base_coloring &&
        base_coloring->coloring.colors_used() < seed_coloring.coloring.colors_used()) {
      chosen = &*base_coloring;
    }

    Coloring compacted = compact(chosen->coloring);
    for (int u = 0; u < sub.graph.num_vertices(); ++u) {
      total.color[sub.to_parent[u]] = compacted.color[u];
    }
    colors_used = std::max(colors_used, compacted.colors_used());
    // the flag reflects any triangle seen by either route; a triangle found on
    // the losing route still moves the run to the triangle bound
    std::optional<TriangleWitness> seen = seed_coloring.triangle;
    if (!seen && base_coloring) seen = base_coloring->triangle;
    if (!triangle && seen) {
      triangle = translate_triangle(*seen, sub.to_parent);
    }
  }

  total.palette_size = colors_used;
  if (!verify_coloring(g, total)) {
    throw std::logic_error("driver assembled an improper coloring");
  }
  for (int u = 0; u < g.num_vertices(); ++u) {
    if (!total.assigned(u)) throw std::logic_error("driver coloring is not total");
  }
  return ColoredResult{std::move(total), colors_used, triangle};
}

}  // namespace ptcolor
