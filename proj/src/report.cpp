#include "ptcolor/report.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace ptcolor {

namespace {

using nlohmann::json;

json refutation_to_json(const Refutation& ref) {
  if (const auto* small = std::get_if<SmallSubgraphRefutation>(&ref)) {
    json j;
    j["type"] = "small_subgraph";
    j["vertices"] = small->vertices;
    j["oversized"] = small->oversized;
    return j;
  }
  const auto& le = std::get<ListExhaustionRefutation>(ref);
  json j;
  j["type"] = "list_exhaustion";
  j["seed_set"] = le.seed_set;
  j["frontier"] = le.frontier;
  return j;
}

}  // namespace

std::string driver_result_to_json(const DriverResult& result, int t, double runtime_ms) {
  json j;
  j["schema"] = 1;
  j["t"] = t;
  j["runtime_ms"] = runtime_ms;
  bool triangle_present = false;
  if (const auto* colored = std::get_if<ColoredResult>(&result)) {
    j["status"] = "colored";
    j["colors_used"] = colored->colors_used;
    j["coloring"] = colored->coloring.color;
    if (colored->triangle) {
      triangle_present = true;
      j["triangle"] = colored->triangle->vertices;
    } else {
      j["triangle"] = nullptr;
    }
  } else if (const auto* found = std::get_if<FoundPt>(&result)) {
    j["status"] = "found_pt";
    j["path"] = found->path.vertices;
    j["triangle"] = nullptr;
  } else {
    j["status"] = "not_three_colorable";
    j["certificate"] = refutation_to_json(std::get<NotThreeColorable>(result).refutation);
    j["triangle"] = nullptr;
  }
  j["bound"] = bound(t, triangle_present);
  return j.dump(2) + "\n";
}

std::string verify_report_against_graph(const Graph& g, const std::string& json_text,
                                        int oracle_cap) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("report is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("schema") || !j.contains("status") || !j.contains("t") ||
      !j.contains("bound")) {
    throw std::runtime_error("report is missing required fields");
  }
  if (j["schema"].get<int>() != 1) throw std::runtime_error("unsupported schema version");
  const int t = j["t"].get<int>();
  const std::string status = j["status"].get<std::string>();

  if (status == "colored") {
    if (!j.contains("coloring") || !j.contains("colors_used")) {
      throw std::runtime_error("colored report without a coloring");
    }
    Coloring c;
    c.color = j["coloring"].get<std::vector<int>>();
    c.palette_size = j["colors_used"].get<int>();
    if (static_cast<int>(c.color.size()) != g.num_vertices()) {
      return "coloring length does not match the graph";
    }
    for (int u = 0; u < g.num_vertices(); ++u) {
      if (!c.assigned(u)) return "coloring is not total";
    }
    if (!verify_coloring(g, c)) return "coloring is improper or exceeds its declared palette";
    bool triangle_present = j.contains("triangle") && !j["triangle"].is_null();
    if (triangle_present) {
      auto tv = j["triangle"].get<std::vector<int>>();
      if (tv.size() != 3) return "triangle witness must have three vertices";
      TriangleWitness tri{{tv[0], tv[1], tv[2]}};
      if (!verify_triangle(g, tri)) return "triangle witness invalid";
    }
    if (j["bound"].get<int>() != bound(t, triangle_present)) {
      return "declared bound does not match t and the triangle flag";
    }
    return "";
  }
  if (status == "found_pt") {
    if (!j.contains("path")) throw std::runtime_error("found_pt report without a path");
    PathWitness p{j["path"].get<std::vector<int>>()};
    if (!verify_path(g, p, t)) return "path witness is not an induced path on t vertices";
    return "";
  }
  if (status == "not_three_colorable") {
    if (!j.contains("certificate")) {
      throw std::runtime_error("refutation report without a certificate");
    }
    const auto& cert = j["certificate"];
    const std::string type = cert.value("type", "");
    Refutation ref;
    if (type == "small_subgraph") {
      SmallSubgraphRefutation small;
      small.vertices = cert["vertices"].get<std::vector<int>>();
      small.oversized = cert.value("oversized", false);
      ref = small;
    } else if (type == "list_exhaustion") {
      ListExhaustionRefutation le;
      le.seed_set = cert["seed_set"].get<std::vector<int>>();
      le.frontier = cert["frontier"].get<std::vector<int>>();
      ref = le;
    } else {
      throw std::runtime_error("unknown certificate type");
    }
    if (!verify_refutation(g, ref, oracle_cap)) return "refutation does not verify";
    return "";
  }
  throw std::runtime_error("unknown status " + status);
}

}  // namespace ptcolor
