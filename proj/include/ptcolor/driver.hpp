// End-to-end driver: per connected component run the seed algorithm with
// k = t, finish the frontier with three fresh colors, also run the base
// colorer, and keep the better coloring.
#pragma once

#include <optional>
#include <variant>

#include "ptcolor/graph.hpp"
#include "ptcolor/seed.hpp"
#include "ptcolor/start_color.hpp"

namespace ptcolor {

enum class RootPolicy { LowestId, MaxDegree, FixedId };

struct DriverOptions {
  RootPolicy policy = RootPolicy::LowestId;
  int root_id = 0;  // used by FixedId for the component containing it
  StartOptions start;
};

struct ColoredResult {
  Coloring coloring;  // proper and total
  int colors_used = 0;
  std::optional<TriangleWitness> triangle;
};

struct FoundPt {
  PathWitness path;
};

using DriverResult = std::variant<ColoredResult, FoundPt, NotThreeColorable>;

// Best-option color bound for 3-colorable P_t-free graphs; throws for t < 3.
int bound(int t, bool triangle);

DriverResult approx_color(const Graph& g, int t, const DriverOptions& opts = {});

}  // namespace ptcolor
