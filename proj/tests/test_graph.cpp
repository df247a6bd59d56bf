#include <doctest.h>

#include "l0graph/errors.hpp"
#include "l0graph/graph.hpp"
#include "oracles.hpp"

using namespace l0graph;

TEST_SUITE_BEGIN("graph");

TEST_CASE("edges are canonicalized and sorted") {
  Graph g(4, {{2, 1}, {0, 3}, {1, 0}});
  REQUIRE(g.num_edges() == 3);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{0, 3});
  CHECK(g.edge(2) == Edge{1, 2});
  CHECK(g.find_edge(2, 1) == 2);
  CHECK_FALSE(g.find_edge(2, 3).has_value());
}

TEST_CASE("invalid edge lists are rejected") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), GraphError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), GraphError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), GraphError);
  CHECK_THROWS_AS(Graph(0, {}), GraphError);
}

TEST_CASE("adjacency matches the edge list") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_graph(rng, 9, 14);
    Index total = 0;
    for (Index v = 0; v < g.num_vertices(); ++v) {
      for (const auto& inc : g.incident(v)) {
        const Edge& e = g.edge(inc.edge);
        CHECK((e.u == v || e.v == v));
        CHECK(inc.neighbor == (e.u == v ? e.v : e.u));
      }
      total += g.degree(v);
    }
    CHECK(total == 2 * g.num_edges());
  }
}

TEST_CASE("connectivity") {
  CHECK(chain_graph(5).is_connected());
  Graph two(4, {{0, 1}, {2, 3}});
  CHECK(two.num_components() == 2);
  const auto labels = two.component_labels();
  CHECK(labels[0] == labels[1]);
  CHECK(labels[0] != labels[2]);
  CHECK(Graph(1, {}).is_connected());
}

TEST_CASE("chain order") {
  Graph path(4, {{2, 0}, {0, 3}, {3, 1}});
  const auto order = path.chain_order();
  REQUIRE(order);
  CHECK(*order == std::vector<Index>{1, 3, 0, 2});
  CHECK_FALSE(cycle_graph(4).chain_order());
  CHECK_FALSE(lattice_graph(2, 3).chain_order());
  CHECK_FALSE(Graph(4, {{0, 1}, {2, 3}}).chain_order());
}

TEST_CASE("builders") {
  CHECK(chain_graph(6).num_edges() == 5);
  CHECK(cycle_graph(6).num_edges() == 6);
  CHECK(complete_graph(6).num_edges() == 15);
  CHECK(lattice_graph(3, 4).num_edges() == 3 * 3 + 2 * 4);
  const Graph t = tadpole_graph(5, 4);
  CHECK(t.num_vertices() == 9);
  CHECK(t.num_edges() == 4 + 1 + 6);
  CHECK(t.find_edge(4, 5).has_value());
}

TEST_CASE("edge weighting validation") {
  CHECK_THROWS_AS(EdgeWeighting(Vector::Constant(2, -1.0)), DimensionError);
  CHECK_THROWS_AS(EdgeWeighting(Vector::Constant(2, std::nan(""))), DimensionError);
  CHECK_THROWS(require_aligned(chain_graph(4), EdgeWeighting(Vector::Ones(2))));
  CHECK(EdgeWeighting::unit(chain_graph(4)).values().sum() == 3.0);
}

TEST_CASE("grid") {
  const Grid g = Grid::covering((Vector(3) << -0.125, 0.3, 0.994).finished(), 0.01);
  CHECK(g.lo == -13);
  CHECK(g.hi == 99);
  const Grid half(0.5, -4, 4);
  CHECK(half.nearest(0.25) == 1);
  CHECK(half.nearest(-0.25) == -1);
  CHECK(g.value(7) == doctest::Approx(0.07));
  CHECK_THROWS_AS(Grid(0.0, 0, 1), DimensionError);
  CHECK_THROWS_AS(Grid(1.0, 2, 1), DimensionError);
  CHECK_THROWS_AS(LabeledSignal({0, 5}, Grid(1.0, 0, 3)), DimensionError);
}

TEST_CASE("induced partition") {
  const Grid grid(1.0, 0, 5);
  SUBCASE("constant labels") {
    const auto p = induced_partition(LabeledSignal::constant(5, 2, grid), chain_graph(5));
    CHECK(p.num_blocks == 1);
    CHECK(p.boundary.empty());
  }
  SUBCASE("all distinct on a chain") {
    const auto p = induced_partition(LabeledSignal({0, 1, 2, 3, 4}, grid), chain_graph(5));
    CHECK(p.num_blocks == 5);
    CHECK(p.boundary.size() == 4);
  }
  SUBCASE("blocks are label classes, not runs") {
    const auto p = induced_partition(LabeledSignal({1, 1, 3, 3, 1}, grid), chain_graph(5));
    CHECK(p.num_blocks == 2);
    CHECK(p.boundary == std::vector<Index>{1, 3});
    CHECK(p.block == std::vector<Index>{0, 0, 1, 1, 0});
  }
}

TEST_CASE("cut weight") {
  const Graph g = chain_graph(5);
  const Grid grid(1.0, 0, 5);
  const auto p = induced_partition(LabeledSignal({1, 1, 3, 3, 1}, grid), g);
  CHECK(cut_weight(p, EdgeWeighting::unit(g)) == 2.0);
  CHECK(cut_weight(induced_partition(LabeledSignal::constant(5, 0, grid), g), EdgeWeighting::unit(g)) == 0.0);
  const Vector w = (Vector(4) << 0.5, 0.25, 2.0, 4.0).finished();
  CHECK(cut_weight(p, EdgeWeighting(w)) == 0.25 + 4.0);
}
