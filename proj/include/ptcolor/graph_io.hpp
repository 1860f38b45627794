// Text formats: graphs as "n m" followed by one edge per line, NAE-3SAT
// formulas as "p nae3 <vars> <clauses>" followed by one clause per line.
// Lines starting with '#' are comments.
#pragma once

#include <iosfwd>
#include <string>

#include "ptcolor/graph.hpp"
#include "ptcolor/oracles.hpp"

namespace ptcolor {

// Both parsers throw std::runtime_error with a 1-based line number on
// malformed input.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
Graph load_graph(const std::string& path);
std::string serialize_graph(const Graph& g);
void save_graph(const Graph& g, const std::string& path);

NaeFormula parse_nae_formula(std::istream& in);
NaeFormula parse_nae_formula_string(const std::string& text);
NaeFormula load_nae_formula(const std::string& path);
std::string serialize_nae_formula(const NaeFormula& f);

}  // namespace ptcolor
