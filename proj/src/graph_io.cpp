#include "ptcolor/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ptcolor {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

// Strips '#' comments; returns false for blank lines.
bool payload_of(const std::string& raw, std::string& out) {
  auto hash = raw.find('#');
  out = (hash == std::string::npos) ? raw : raw.substr(0, hash);
  for (char c : out) {
    if (!isspace(static_cast<unsigned char>(c))) return true;
  }
  return false;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string raw, line;
  int line_no = 0;
  int n = -1;
  long long m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!payload_of(raw, line)) continue;
    std::istringstream ss(line);
    if (n < 0) {
      if (!(ss >> n >> m) || n < 0 || m < 0) fail(line_no, "expected header \"n m\"");
      std::string extra;
      if (ss >> extra) fail(line_no, "trailing tokens after header");
      continue;
    }
    int u, v;
    if (!(ss >> u >> v)) fail(line_no, "expected edge \"u v\"");
    std::string extra;
    if (ss >> extra) fail(line_no, "trailing tokens after edge");
    if (static_cast<long long>(edges.size()) >= m) fail(line_no, "more edges than declared");
    edges.emplace_back(u, v);
    try {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("endpoint outside 0.." + std::to_string(n - 1));
      if (u == v) throw std::invalid_argument("self-loop");
    } catch (const std::invalid_argument& e) {
      fail(line_no, e.what());
    }
  }
  if (n < 0) throw std::runtime_error("empty graph file: missing \"n m\" header");
  if (static_cast<long long>(edges.size()) != m)
    throw std::runtime_error("declared " + std::to_string(m) + " edges but found " +
                             std::to_string(edges.size()));
  return Graph::from_edge_list(n, edges);
}

Graph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_graph(g);
}

NaeFormula parse_nae_formula(std::istream& in) {
  std::string raw, line;
  int line_no = 0;
  NaeFormula f;
  int declared_clauses = -1;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!payload_of(raw, line)) continue;
    std::istringstream ss(line);
    if (declared_clauses < 0) {
      std::string p, tag;
      if (!(ss >> p >> tag >> f.num_vars >> declared_clauses) || p != "p" || tag != "nae3" ||
          f.num_vars < 0 || declared_clauses < 0) {
        fail(line_no, "expected header \"p nae3 <vars> <clauses>\"");
      }
      continue;
    }
    std::array<int, 3> clause{};
    if (!(ss >> clause[0] >> clause[1] >> clause[2])) fail(line_no, "expected three literals");
    std::string extra;
    if (ss >> extra) fail(line_no, "trailing tokens after clause");
    for (int lit : clause) {
      if (lit == 0 || std::abs(lit) > f.num_vars) fail(line_no, "literal out of range");
    }
    if (static_cast<int>(f.clauses.size()) >= declared_clauses)
      fail(line_no, "more clauses than declared");
    f.clauses.push_back(clause);
  }
  if (declared_clauses < 0) throw std::runtime_error("empty formula file: missing p-line");
  if (static_cast<int>(f.clauses.size()) != declared_clauses)
    throw std::runtime_error("declared " + std::to_string(declared_clauses) +
                             " clauses but found " + std::to_string(f.clauses.size()));
  return f;
}

NaeFormula parse_nae_formula_string(const std::string& text) {
  std::istringstream in(text);
  return parse_nae_formula(in);
}

NaeFormula load_nae_formula(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_nae_formula(in);
}

std::string serialize_nae_formula(const NaeFormula& f) {
  std::ostringstream out;
  out << "p nae3 " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << '\n';
  return out.str();
}

}  // namespace ptcolor
