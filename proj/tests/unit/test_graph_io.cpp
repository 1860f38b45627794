#include <stdexcept>
#include <string>

#include "doctest.h"
#include "ptcolor/graph_io.hpp"
#include "test_util.hpp"

using namespace ptcolor;
using namespace ptcolor::testing;

TEST_CASE("graph text format round trip") {
  Graph g = petersen_graph();
  Graph back = parse_graph_string(serialize_graph(g));
  CHECK(back.num_vertices() == g.num_vertices());
  CHECK(back.num_edges() == g.num_edges());
  CHECK(back.edges() == g.edges());
}

TEST_CASE("parse after serialize is the identity on random graphs") {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = random_graph(1 + static_cast<int>(seed % 14), 0.4, 15000 + seed);
    Graph back = parse_graph_string(serialize_graph(g));
    CHECK(back.num_vertices() == g.num_vertices());
    CHECK(back.edges() == g.edges());
  }
}

TEST_CASE("graph parser accepts comments and reports line numbers") {
  Graph g = parse_graph_string("# a triangle\n3 3\n0 1\n1 2 # last two\n0 2\n");
  CHECK(g.num_edges() == 3);

  CHECK_THROWS_WITH_AS(parse_graph_string("3 2\n0 1\n"), doctest::Contains("declared 2"),
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_graph_string("2 1\n0 0\n"), doctest::Contains("line 2"),
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_graph_string("2 1\n0 5\n"), doctest::Contains("line 2"),
                       std::runtime_error);
  CHECK_THROWS_AS(parse_graph_string(""), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_graph_string("2 1\n0 1\n1 0\n"), doctest::Contains("line 3"),
                       std::runtime_error);
}

TEST_CASE("nae formula format round trip") {
  NaeFormula f;
  f.num_vars = 3;
  f.clauses = {{1, 2, 3}, {-1, 2, -3}};
  NaeFormula back = parse_nae_formula_string(serialize_nae_formula(f));
  CHECK(back.num_vars == 3);
  CHECK(back.clauses == f.clauses);

  CHECK_THROWS_AS(parse_nae_formula_string("p cnf 3 1\n1 2 3\n"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_nae_formula_string("p nae3 2 1\n1 0 2\n"),
                       doctest::Contains("line 2"), std::runtime_error);
  CHECK_THROWS_AS(parse_nae_formula_string("p nae3 2 2\n1 2 -1\n"), std::runtime_error);
}
