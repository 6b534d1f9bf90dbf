#include <stdexcept>

#include "doctest.h"
#include "emu/generators.hpp"
#include "emu/graph.hpp"

using namespace emu;

TEST_CASE("cycle and grid have the textbook edge counts") {
  Graph c6 = generate("cycle:6", 0);
  CHECK(c6.n == 6);
  CHECK(c6.edge_count == 6);

  Graph g33 = generate("grid:3:3", 0);
  CHECK(g33.n == 9);
  CHECK(g33.edge_count == 12);
  CHECK(g33.has_edge(0, 1));
  CHECK(g33.has_edge(0, 3));
  CHECK(!g33.has_edge(2, 3));  // row boundary

  Graph tall = generate("grid:1:5", 0);
  CHECK(tall.n == 5);
  CHECK(tall.edge_count == 4);
}

TEST_CASE("random trees span") {
  Graph t = generate("tree:50", 3);
  CHECK(t.n == 50);
  CHECK(t.edge_count == 49);
  CHECK(connected_components(t).size() == 1);
}

TEST_CASE("er graphs are seed-deterministic") {
  Graph a = generate("er:100:0.05", 5);
  Graph b = generate("er:100:0.05", 5);
  CHECK(a.edges() == b.edges());
  CHECK(a.edges() == er_graph(100, 0.05, 5).edges());

  Graph c = generate("er:100:0.05", 6);
  CHECK(a.edges() != c.edges());

  CHECK(er_graph(40, 0.0, 1).edge_count == 0);
  CHECK(er_graph(10, 1.0, 1).edge_count == 45);
}

TEST_CASE("geometric graphs densify with the radius") {
  Graph sparse = generate("geo:80:0.05", 2);
  Graph dense = generate("geo:80:0.3", 2);
  CHECK(sparse.n == 80);
  CHECK(sparse.edge_count < dense.edge_count);
  CHECK(geo_graph(40, 0.0, 1).edge_count == 0);
  CHECK(geo_graph(40, 1.5, 1).edge_count == 780);  // unit square diameter < 1.5
}

TEST_CASE("spec parsing rejects malformed strings") {
  CHECK_THROWS_AS(generate("mystery:5", 0), std::invalid_argument);
  CHECK_THROWS_AS(generate("er:10", 0), std::invalid_argument);
  CHECK_THROWS_AS(generate("er:10:0.5:9", 0), std::invalid_argument);
  CHECK_THROWS_AS(generate("er:-3:0.5", 0), std::invalid_argument);
  CHECK_THROWS_AS(generate("er:10:1.5", 0), std::invalid_argument);
  CHECK_THROWS_AS(generate("er:x:0.5", 0), std::invalid_argument);
  CHECK_THROWS_AS(generate("er:10:zebra", 0), std::invalid_argument);
  CHECK_THROWS_AS(generate("cycle:2", 0), std::invalid_argument);
  CHECK_THROWS_AS(generate("grid:0:4", 0), std::invalid_argument);
  CHECK_THROWS_AS(generate("geo:10:-0.2", 0), std::invalid_argument);
  CHECK_THROWS_AS(generate("", 0), std::invalid_argument);
}
