// Python bindings for the main operations: coloring driver, verifiers,
// brute-force oracles, and instance generators.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <variant>

#include "ptcolor/closure.hpp"
#include "ptcolor/driver.hpp"
#include "ptcolor/finish.hpp"
#include "ptcolor/generators.hpp"
#include "ptcolor/graph_io.hpp"
#include "ptcolor/oracles.hpp"
#include "ptcolor/report.hpp"

namespace py = pybind11;
using namespace ptcolor;

namespace {

py::dict refutation_to_dict(const Refutation& ref) {
  py::dict d;
  if (const auto* small = std::get_if<SmallSubgraphRefutation>(&ref)) {
    d["type"] = "small_subgraph";
    d["vertices"] = small->vertices;
    d["oversized"] = small->oversized;
  } else {
    const auto& le = std::get<ListExhaustionRefutation>(ref);
    d["type"] = "list_exhaustion";
    d["seed_set"] = le.seed_set;
    d["frontier"] = le.frontier;
  }
  return d;
}

Refutation refutation_from_dict(const py::dict& d) {
  std::string type = py::cast<std::string>(d["type"]);
  if (type == "small_subgraph") {
    SmallSubgraphRefutation small;
    small.vertices = py::cast<std::vector<int>>(d["vertices"]);
    if (d.contains("oversized")) small.oversized = py::cast<bool>(d["oversized"]);
    return small;
  }
  if (type == "list_exhaustion") {
    ListExhaustionRefutation le;
    le.seed_set = py::cast<std::vector<int>>(d["seed_set"]);
    le.frontier = py::cast<std::vector<int>>(d["frontier"]);
    return le;
  }
  throw std::invalid_argument("unknown certificate type " + type);
}

py::dict driver_result_to_dict(const DriverResult& result, int t) {
  py::dict d;
  d["t"] = t;
  if (const auto* colored = std::get_if<ColoredResult>(&result)) {
    d["status"] = "colored";
    d["colors_used"] = colored->colors_used;
    d["coloring"] = colored->coloring.color;
    if (colored->triangle) {
      d["triangle"] = colored->triangle->vertices;
    } else {
      d["triangle"] = py::none();
    }
    d["bound"] = bound(t, colored->triangle.has_value());
  } else if (const auto* found = std::get_if<FoundPt>(&result)) {
    d["status"] = "found_pt";
    d["path"] = found->path.vertices;
    d["bound"] = bound(t, false);
  } else {
    d["status"] = "not_three_colorable";
    d["certificate"] = refutation_to_dict(std::get<NotThreeColorable>(result).refutation);
    d["bound"] = bound(t, false);
  }
  return d;
}

DriverOptions make_driver_options(const std::string& root, int root_id, int cert_cap) {
  DriverOptions opts;
  if (root == "lowest-id") {
    opts.policy = RootPolicy::LowestId;
  } else if (root == "max-degree") {
    opts.policy = RootPolicy::MaxDegree;
  } else if (root == "fixed") {
    opts.policy = RootPolicy::FixedId;
    opts.root_id = root_id;
  } else {
    throw std::invalid_argument("root policy must be lowest-id, max-degree, or fixed");
  }
  opts.start.certificate_cap = cert_cap;
  return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "coloring for 3-colorable graphs without long induced paths";

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             return Graph::from_edge_list(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::num_vertices)
      .def_property_readonly("m", &Graph::num_edges)
      .def("neighbors", &Graph::neighbors, py::arg("v"))
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("edges", &Graph::edges)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) +
               ", m=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("parse_graph", &parse_graph_string, py::arg("text"));
  m.def("serialize_graph", &serialize_graph, py::arg("graph"));
  m.def("load_graph", &load_graph, py::arg("path"));

  m.def(
      "approx_color",
      [](const Graph& g, int t, const std::string& root, int root_id, int cert_cap) {
        return driver_result_to_dict(approx_color(g, t, make_driver_options(root, root_id,
                                                                            cert_cap)),
                                     t);
      },
      py::arg("graph"), py::arg("t"), py::arg("root") = "lowest-id", py::arg("root_id") = 0,
      py::arg("cert_cap") = kDefaultBruteCap);

  m.def("bound", &bound, py::arg("t"), py::arg("triangle"));

  m.def(
      "verify_coloring",
      [](const Graph& g, const std::vector<int>& colors, int palette_size) {
        int palette = palette_size;
        if (palette < 0) {
          Coloring probe{colors, 0};
          palette = probe.colors_used();
        }
        return verify_coloring(g, Coloring{colors, palette});
      },
      py::arg("graph"), py::arg("colors"), py::arg("palette_size") = -1);
  m.def(
      "verify_path",
      [](const Graph& g, const std::vector<int>& vertices, int required_len,
         std::optional<int> start) {
        return verify_path(g, PathWitness{vertices}, required_len, start);
      },
      py::arg("graph"), py::arg("vertices"), py::arg("required_len"),
      py::arg("start") = std::nullopt);
  m.def(
      "verify_refutation",
      [](const Graph& g, const py::dict& certificate, int cap) {
        return verify_refutation(g, refutation_from_dict(certificate), cap);
      },
      py::arg("graph"), py::arg("certificate"), py::arg("cap") = kDefaultBruteCap);

  m.def(
      "brute_three_color",
      [](const Graph& g, int cap) -> std::optional<std::vector<int>> {
        auto got = brute_three_color(g, cap);
        if (!got) return std::nullopt;
        return got->color;
      },
      py::arg("graph"), py::arg("cap") = kDefaultBruteCap);
  m.def(
      "find_induced_path",
      [](const Graph& g, int t, std::optional<int> start,
         int cap) -> std::optional<std::vector<int>> {
        auto got = find_induced_path(g, t, start, cap);
        if (!got) return std::nullopt;
        return got->vertices;
      },
      py::arg("graph"), py::arg("t"), py::arg("start") = std::nullopt,
      py::arg("cap") = kDefaultBruteCap);

  m.def(
      "closure",
      [](const Graph& g, const std::vector<int>& seeds) {
        auto cr = closure_F(g, seeds);
        py::dict d;
        d["closure"] = cr.closure;
        d["frontier"] = cr.frontier;
        return d;
      },
      py::arg("graph"), py::arg("seeds"));

  m.def(
      "nae_solve",
      [](int num_vars, const std::vector<std::array<int, 3>>& clauses,
         int cap) -> std::optional<std::vector<bool>> {
        return nae_solve(NaeFormula{num_vars, clauses}, cap);
      },
      py::arg("num_vars"), py::arg("clauses"), py::arg("cap") = kDefaultNaeVarCap);
  m.def(
      "nae_reduction",
      [](int num_vars, const std::vector<std::array<int, 3>>& clauses) {
        auto rg = nae_reduction(NaeFormula{num_vars, clauses});
        py::dict d;
        d["graph"] = rg.graph;
        d["apex"] = rg.apex;
        d["literal_vertices"] = rg.literal_vertices;
        d["clause_triangles"] = rg.clause_triangles;
        return d;
      },
      py::arg("num_vars"), py::arg("clauses"));

  m.def("clique_join", &clique_join, py::arg("graph"), py::arg("k"));
  m.def("random_3colorable", &random_3colorable, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("random_3colorable_ptfree", &random_3colorable_ptfree, py::arg("n"), py::arg("t"),
        py::arg("p"), py::arg("seed"), py::arg("max_tries") = 1000);
  m.def("multipartite", &multipartite, py::arg("sizes"));
}
