// ptcolor: color 3-colorable P_t-free graphs with a bounded palette, emit and
// verify certificates, and generate benchmark corpora.
#include <chrono>
#include <climits>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ptcolor/driver.hpp"
#include "ptcolor/generators.hpp"
#include "ptcolor/graph_io.hpp"
#include "ptcolor/oracles.hpp"
#include "ptcolor/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ptcolor;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFoundPath = 2;
constexpr int kExitNotThreeColorable = 3;
constexpr int kExitVerifyFailed = 4;

DriverOptions parse_root_policy(const std::string& root) {
  DriverOptions opts;
  if (root == "lowest-id") {
    opts.policy = RootPolicy::LowestId;
  } else if (root == "max-degree") {
    opts.policy = RootPolicy::MaxDegree;
  } else {
    opts.policy = RootPolicy::FixedId;
    opts.root_id = std::stoi(root);
  }
  return opts;
}

void write_output(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << payload;
}

int cmd_color(const std::string& input, int t, const std::string& root, int cert_cap,
              const std::string& out_path) {
  Graph g = load_graph(input);
  DriverOptions opts = parse_root_policy(root);
  opts.start.certificate_cap = cert_cap;
  auto started = std::chrono::steady_clock::now();
  DriverResult result = approx_color(g, t, opts);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                        started)
                  .count();
  write_output(driver_result_to_json(result, t, ms), out_path);
  if (std::holds_alternative<FoundPt>(result)) return kExitFoundPath;
  if (std::holds_alternative<NotThreeColorable>(result)) return kExitNotThreeColorable;
  return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& result_path, int oracle_cap) {
  Graph g = load_graph(graph_path);
  std::ifstream in(result_path);
  if (!in) throw std::runtime_error("cannot open " + result_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string verdict = verify_report_against_graph(g, buffer.str(), oracle_cap);
  if (!verdict.empty()) {
    std::cerr << "verification failed: " << verdict << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

struct GenerateParams {
  std::string family;
  std::string formula_path;
  std::string input_path;
  int k = 4;
  int n = 12;
  double p = 0.5;
  int t = 6;
  int max_tries = 1000;
  std::string sizes = "4,4,4";
  uint64_t seed = 1;
  int count = 1;
  std::string outdir = ".";
};

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

int cmd_generate(const GenerateParams& params) {
  fs::create_directories(params.outdir);
  json manifest;
  manifest["schema"] = 1;
  manifest["instances"] = json::array();

  auto emit = [&](const Graph& g, const std::string& name, json meta) {
    std::string file = name + ".graph";
    save_graph(g, (fs::path(params.outdir) / file).string());
    meta["file"] = file;
    meta["generator"] = params.family;
    meta["n"] = g.num_vertices();
    meta["m"] = g.num_edges();
    manifest["instances"].push_back(std::move(meta));
  };

  for (int idx = 0; idx < params.count; ++idx) {
    uint64_t seed = params.seed + static_cast<uint64_t>(idx);
    std::string name = params.family + "_" + std::to_string(idx);
    if (params.family == "nae-reduction") {
      if (params.formula_path.empty()) throw std::runtime_error("--formula is required");
      NaeFormula f = load_nae_formula(params.formula_path);
      auto rg = nae_reduction(f);
      json meta;
      meta["params"] = {{"formula", params.formula_path}};
      meta["apex"] = rg.apex;
      emit(rg.graph, name, std::move(meta));
    } else if (params.family == "clique-join") {
      if (params.input_path.empty()) throw std::runtime_error("--input is required");
      Graph base = load_graph(params.input_path);
      json meta;
      meta["params"] = {{"input", params.input_path}, {"k", params.k}};
      emit(clique_join(base, params.k), name, std::move(meta));
    } else if (params.family == "random-3col") {
      Graph g = random_3colorable(params.n, params.p, seed);
      json meta;
      meta["params"] = {{"n", params.n}, {"p", params.p}};
      meta["seed"] = seed;
      meta["three_colorable"] = true;
      emit(g, name, std::move(meta));
    } else if (params.family == "random-3col-ptfree") {
      auto g = random_3colorable_ptfree(params.n, params.t, params.p, seed, params.max_tries);
      if (!g) {
        throw std::runtime_error("sampling failed after " + std::to_string(params.max_tries) +
                                 " tries (instance " + std::to_string(idx) + ")");
      }
      json meta;
      meta["params"] = {{"n", params.n}, {"p", params.p}, {"t", params.t}};
      meta["seed"] = seed;
      meta["three_colorable"] = true;
      meta["pt_free_from"] = params.t;
      emit(*g, name, std::move(meta));
    } else if (params.family == "tripartite") {
      auto sizes = parse_sizes(params.sizes);
      if (sizes.size() != 3) throw std::runtime_error("tripartite requires three sizes");
      json meta;
      meta["params"] = {{"sizes", sizes}};
      meta["three_colorable"] = true;
      meta["pt_free_from"] = 4;
      emit(multipartite(sizes), name, std::move(meta));
      break;  // deterministic family, one instance regardless of count
    } else {
      throw std::runtime_error("unknown family " + params.family);
    }
  }
  std::ofstream out(fs::path(params.outdir) / "manifest.json");
  out << manifest.dump(2) << "\n";
  return kExitOk;
}

int cmd_bench(const std::string& corpus, int t_min, int t_max, const std::string& out_path,
              const std::string& root) {
  fs::path manifest_path = fs::path(corpus) / "manifest.json";
  std::ifstream in(manifest_path);
  if (!in) {
    std::cerr << "missing manifest: " << manifest_path << "\n";
    return kExitError;
  }
  json manifest = json::parse(in);
  DriverOptions opts = parse_root_policy(root);

  struct Row {
    std::string instance;
    int t;
    std::string colors;
    int bound_value;
    std::string triangle;
    double runtime_ms;
  };
  std::vector<Row> rows;
  struct Summary {
    int max_colors = 0;
    int bound_value = 0;
    int violations = 0;
    int instances = 0;
  };
  std::map<int, Summary> summaries;

  std::vector<json> instances(manifest["instances"].begin(), manifest["instances"].end());
  std::sort(instances.begin(), instances.end(),
            [](const json& a, const json& b) { return a["file"] < b["file"]; });

  for (const auto& inst : instances) {
    std::string file = inst["file"].get<std::string>();
    Graph g = load_graph((fs::path(corpus) / file).string());
    bool three_colorable = inst.value("three_colorable", false);
    int pt_free_from = inst.value("pt_free_from", INT_MAX);
    for (int t = t_min; t <= t_max; ++t) {
      auto started = std::chrono::steady_clock::now();
      auto result = approx_color(g, t, opts);
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            started)
                      .count();
      Row row{file, t, "", 0, "", ms};
      if (auto* colored = std::get_if<ColoredResult>(&result)) {
        row.colors = std::to_string(colored->colors_used);
        row.triangle = colored->triangle ? "yes" : "no";
        row.bound_value = bound(t, colored->triangle.has_value());
        if (three_colorable && t >= pt_free_from) {
          auto& s = summaries[t];
          ++s.instances;
          s.max_colors = std::max(s.max_colors, colored->colors_used);
          s.bound_value = std::max(s.bound_value, row.bound_value);
          if (colored->colors_used > row.bound_value) ++s.violations;
        }
      } else if (std::holds_alternative<FoundPt>(result)) {
        row.colors = "found_pt";
        row.bound_value = bound(t, false);
      } else {
        row.colors = "not_3_colorable";
        row.bound_value = bound(t, false);
      }
      rows.push_back(std::move(row));
    }
  }

  std::ostringstream csv;
  csv << "instance,t,colors_used,bound,triangle,runtime_ms\n";
  for (const auto& row : rows) {
    csv << row.instance << ',' << row.t << ',' << row.colors << ',' << row.bound_value << ','
        << row.triangle << ',' << row.runtime_ms << "\n";
  }
  for (const auto& [t, s] : summaries) {
    csv << "SUMMARY,t=" << t << ",max_colors=" << s.max_colors << ",bound=" << s.bound_value
        << ",violations=" << s.violations << ",instances=" << s.instances << "\n";
  }
  write_output(csv.str(), out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coloring for 3-colorable graphs without long induced paths"};
  app.require_subcommand(1);

  std::string input, out_path, root = "lowest-id";
  int t = 6, cert_cap = kDefaultBruteCap, oracle_cap = kDefaultBruteCap;

  auto* color = app.add_subcommand("color", "color a graph and emit a JSON report");
  color->add_option("graph", input, "graph file")->required();
  color->add_option("--t", t, "forbidden induced path length")->required();
  color->add_option("--root", root, "root policy: lowest-id, max-degree, or a vertex id");
  color->add_option("--cert-cap", cert_cap, "certificate size cap");
  color->add_option("--out", out_path, "output file (default stdout)");

  std::string result_path;
  auto* verify = app.add_subcommand("verify", "re-check a JSON report against its graph");
  verify->add_option("graph", input, "graph file")->required();
  verify->add_option("result", result_path, "JSON report to verify")->required();
  verify->add_option("--cap-oracle", oracle_cap, "brute-force verification cap");

  GenerateParams gen;
  auto* generate = app.add_subcommand("generate", "write instance files plus a manifest");
  generate->add_option("--family", gen.family,
                       "nae-reduction | clique-join | random-3col | random-3col-ptfree | tripartite")
      ->required();
  generate->add_option("--formula", gen.formula_path, "NAE formula file (nae-reduction)");
  generate->add_option("--input", gen.input_path, "base graph file (clique-join)");
  generate->add_option("--k", gen.k, "target palette (clique-join)");
  generate->add_option("--n", gen.n, "vertex count");
  generate->add_option("--p", gen.p, "edge probability");
  generate->add_option("--t", gen.t, "forbidden induced path length (random-3col-ptfree)");
  generate->add_option("--max-tries", gen.max_tries, "rejection sampling budget");
  generate->add_option("--sizes", gen.sizes, "comma-separated part sizes (tripartite)");
  generate->add_option("--seed", gen.seed, "random seed");
  generate->add_option("--count", gen.count, "number of instances");
  generate->add_option("--outdir", gen.outdir, "output directory")->required();

  std::string corpus;
  int t_min = 5, t_max = 8;
  auto* bench_cmd = app.add_subcommand("bench", "run the driver over a corpus, write CSV");
  bench_cmd->add_option("corpus", corpus, "directory with manifest.json")->required();
  bench_cmd->add_option("--t-min", t_min, "first t");
  bench_cmd->add_option("--t-max", t_max, "last t");
  bench_cmd->add_option("--root", root, "root policy");
  bench_cmd->add_option("--out", out_path, "output CSV (default stdout)");

  try {
    app.parse(argc, argv);
    if (color->parsed()) return cmd_color(input, t, root, cert_cap, out_path);
    if (verify->parsed()) return cmd_verify(input, result_path, oracle_cap);
    if (generate->parsed()) return cmd_generate(gen);
    if (bench_cmd->parsed()) return cmd_bench(corpus, t_min, t_max, out_path, root);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
