// The base colorer: given a connected graph and a vertex v that starts no
// induced P_t, produce a bounded coloring, or else surface an induced path
// from v, a triangle-augmented coloring, or a non-3-colorability certificate.
#pragma once

#include <variant>
#include <vector>

#include "ptcolor/graph.hpp"

namespace ptcolor {

struct SmallSubgraphRefutation {
  std::vector<int> vertices;  // G[vertices] is not 3-colorable
  bool oversized = false;     // set when the certificate exceeds the size cap
};

struct ListExhaustionRefutation {
  std::vector<int> seed_set;
  std::vector<int> frontier;  // F(S) with N(F(S)); replay confirms exhaustion
};

using Refutation = std::variant<SmallSubgraphRefutation, ListExhaustionRefutation>;

struct NotThreeColorable {
  Refutation refutation;
};

struct PathFromV {
  PathWitness path;
};

struct PlainColoring {
  Coloring coloring;
};

struct ColoringWithTriangle {
  Coloring coloring;
  TriangleWitness triangle;
};

using StartOutcome = std::variant<NotThreeColorable, PathFromV, PlainColoring, ColoringWithTriangle>;

struct StartOptions {
  int certificate_cap = 24;
};

// Outcomes for connected g, t >= 2:
//   - NotThreeColorable with a small-subgraph certificate,
//   - an induced path on exactly t vertices starting at v,
//   - a coloring of all of V(G) with at most max(2, t-2) colors,
//   - a coloring with at most max(3, 2t-5) colors plus a triangle.
StartOutcome color_from_start(const Graph& g, int v, int t, const StartOptions& opts = {});

// Variant coloring G - v instead: bounds max(1, t-2) and max(2, 2t-5),
// valid for t >= 1.
StartOutcome color_excluding_start(const Graph& g, int v, int t, const StartOptions& opts = {});

}  // namespace ptcolor
