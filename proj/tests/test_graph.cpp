#include <doctest.h>

#include "fptvc/graph.hpp"
#include "test_support.hpp"

using namespace fptvc;

TEST_SUITE("graph") {

TEST_CASE("path graph from an edge list") {
  std::vector<Edge> edges{{0, 1}, {1, 2}};
  Graph g = graph_from_edges(3, edges);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.check_invariants().empty());
}

TEST_CASE("duplicate and reversed pairs collapse") {
  std::vector<Edge> a{{0, 1}, {1, 0}, {1, 2}};
  std::vector<Edge> b{{2, 1}, {0, 1}};
  Graph g = graph_from_edges(3, a);
  CHECK(g.edge_count() == 2);
  CHECK(g == graph_from_edges(3, b));
}

TEST_CASE("self-loop is rejected with the offending pair") {
  std::vector<Edge> edges{{0, 0}};
  CHECK_THROWS_WITH_AS(graph_from_edges(2, edges), "edge (0, 0) is a self-loop", GraphError);
}

TEST_CASE("out-of-range id is rejected") {
  std::vector<Edge> edges{{0, 1}, {1, 3}};
  CHECK_THROWS_AS(graph_from_edges(3, edges), GraphError);
  try {
    graph_from_edges(3, edges);
  } catch (const GraphError& e) {
    CHECK(std::string(e.what()).find("(1, 3)") != std::string::npos);
  }
}

TEST_CASE("empty graphs") {
  Graph none;
  CHECK(none.vertex_count() == 0);
  CHECK(none == graph_from_edges(0, {}));
  Graph five = graph_from_edges(5, {});
  CHECK(five.edge_count() == 0);
  CHECK(five.neighbors(4).empty());
}

TEST_CASE("neighbor rows are sorted and edges come out canonical") {
  std::vector<Edge> edges{{3, 0}, {2, 0}, {0, 1}, {3, 1}};
  Graph g = graph_from_edges(4, edges);
  auto row = g.neighbors(0);
  CHECK(std::vector<Vertex>(row.begin(), row.end()) == std::vector<Vertex>{1, 2, 3});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 3}});
  CHECK(g.degree(3) == 2);
}

TEST_CASE("invariants hold for the fixture graphs") {
  for (const Graph& g : {testing::petersen_graph(), testing::complete_graph(6), testing::star_graph(4),
                         testing::cycle_graph(5)}) {
    CHECK(g.check_invariants().empty());
  }
  CHECK(testing::petersen_graph().edge_count() == 15);
}

}
