#include <doctest.h>

#include <sstream>

#include "rwring/graph.hpp"

using namespace rwring;

namespace {

Graph two_triangle_bridge() {
  // 0-1-2 triangle, 3-4-5 triangle, bridge 2-3
  return Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
}

}  // namespace

TEST_CASE("load_edge_list parses a triangle") {
  std::istringstream in("0 1\n1 2\n2 0\n");
  LoadedGraph loaded = load_edge_list(in);
  CHECK(loaded.graph.node_count() == 3);
  CHECK(loaded.graph.edge_count() == 3);
  CHECK(validate_graph(loaded.graph));
}

TEST_CASE("load_edge_list drops duplicates and self-loops") {
  std::istringstream in("0 1\n1 0\n0 0\n");
  LoadedGraph loaded = load_edge_list(in);
  CHECK(loaded.graph.node_count() == 2);
  CHECK(loaded.graph.edge_count() == 1);
}

TEST_CASE("load_edge_list remaps ids in first-appearance order") {
  std::istringstream in("# c\n5 9\n9 7\n");
  LoadedGraph loaded = load_edge_list(in);
  CHECK(loaded.graph.node_count() == 3);
  CHECK(loaded.graph.edge_count() == 2);
  CHECK(loaded.original_ids == std::vector<std::uint64_t>{5, 9, 7});
  CHECK(loaded.graph.degree(1) == 2);  // node 9 is the path center
}

TEST_CASE("load_edge_list rejects malformed lines with the line number") {
  std::istringstream in("0 1\nnope\n");
  CHECK_THROWS_WITH_AS(load_edge_list(in), doctest::Contains("line 2"), ParseError);

  std::istringstream three("0 1 2\n");
  CHECK_THROWS_AS(load_edge_list(three), ParseError);

  std::istringstream neg("0 -1\n");
  CHECK_THROWS_AS(load_edge_list(neg), ParseError);
}

TEST_CASE("load_edge_list rejects empty input") {
  std::istringstream in("# only comments\n\n");
  CHECK_THROWS_AS(load_edge_list(in), ParseError);
}

TEST_CASE("load_edge_list tolerates blank lines and tabs") {
  std::istringstream in("\n0\t1\n\n1\t2\n");
  LoadedGraph loaded = load_edge_list(in);
  CHECK(loaded.graph.edge_count() == 2);
}

TEST_CASE("Graph construction rejects invariant violations") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("Graph basics on the bridge graph") {
  Graph g = two_triangle_bridge();
  CHECK(g.node_count() == 6);
  CHECK(g.edge_count() == 7);
  CHECK(g.degree(2) == 3);
  CHECK(g.degree(0) == 2);
  CHECK(g.has_edge(2, 3));
  CHECK(!g.has_edge(0, 5));
  CHECK(validate_graph(g));

  std::uint64_t degree_total = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) degree_total += g.degree(v);
  CHECK(degree_total == 2 * g.edge_count());
}

TEST_CASE("MultiGraph keeps loops and parallel edges") {
  MultiGraph mg(3, {{0, 0}, {0, 1}, {0, 1}});
  CHECK(mg.edge_count() == 3);
  CHECK(mg.degree(0) == 4);  // self-loop counts twice
  CHECK(mg.degree(1) == 2);
  CHECK(mg.degree(2) == 0);
  CHECK(validate_multigraph(mg));
}

TEST_CASE("MultiGraph view of a Graph preserves structure") {
  Graph g = two_triangle_bridge();
  MultiGraph mg(g);
  CHECK(mg.edge_count() == g.edge_count());
  CHECK(degree_sequence(mg) == degree_sequence(g));
  CHECK(validate_multigraph(mg));
}

TEST_CASE("edge list round-trips through writer and loader") {
  Graph g = two_triangle_bridge();
  std::ostringstream out;
  write_edge_list(g, out);
  std::istringstream in(out.str());
  LoadedGraph loaded = load_edge_list(in);
  CHECK(loaded.graph.edge_count() == g.edge_count());
  CHECK(loaded.graph.adjacency() == g.adjacency());
  CHECK(loaded.graph.offsets() == g.offsets());
}

TEST_CASE("isolated nodes are kept") {
  Graph g(4, {{0, 1}});
  CHECK(g.node_count() == 4);
  CHECK(g.degree(2) == 0);
  CHECK(validate_graph(g));
}
