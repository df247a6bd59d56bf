#include <doctest.h>

#include "l0graph/errors.hpp"
#include "l0graph/resistance.hpp"
#include "oracles.hpp"

using namespace l0graph;

TEST_SUITE_BEGIN("resistance");

TEST_CASE("closed forms") {
  SUBCASE("triangle") {
    const Graph g = complete_graph(3);
    const auto r = effective_resistances(g);
    const auto t = resistances_by_tree_enumeration(g);
    for (Index e = 0; e < 3; ++e) {
      CHECK(r[e] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
      CHECK(t[e] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    }
  }
  SUBCASE("4-cycle") {
    const auto t = resistances_by_tree_enumeration(cycle_graph(4));
    for (Index e = 0; e < 4; ++e) CHECK(t[e] == 0.75);
    CHECK(spanning_tree_count(cycle_graph(4)) == 4.0);
  }
  SUBCASE("complete graphs") {
    for (Index n = 3; n <= 8; ++n) {
      const Graph g = complete_graph(n);
      const auto r = effective_resistances(g);
      for (Index e = 0; e < g.num_edges(); ++e) CHECK(std::abs(r[e] - 2.0 / static_cast<double>(n)) <= 1e-9);
      CHECK(spanning_tree_count(g) == std::pow(static_cast<double>(n), static_cast<double>(n - 2)));
    }
    const auto t = resistances_by_tree_enumeration(complete_graph(4));
    for (Index e = 0; e < 6; ++e) CHECK(t[e] == 0.5);
  }
  SUBCASE("trees and bridges") {
    std::mt19937_64 rng(4);
    const Graph tree = oracle::random_connected_graph(rng, 12, 0);
    const auto r = effective_resistances(tree);
    for (Index e = 0; e < tree.num_edges(); ++e) CHECK(r[e] == doctest::Approx(1.0).epsilon(1e-10));
    const auto t = resistances_by_tree_enumeration(tree);
    for (Index e = 0; e < tree.num_edges(); ++e) CHECK(t[e] == 1.0);
    const Graph tad = tadpole_graph(3, 5);
    const auto rt = effective_resistances(tad);
    CHECK(rt[*tad.find_edge(2, 3)] == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("laplacian operator") {
  const Graph g = lattice_graph(3, 3);
  const LaplacianOps ops(g);
  CHECK(ops.matrix().rowwise().sum().cwiseAbs().maxCoeff() == 0.0);
  CHECK(ops.resistance(0, 0) == doctest::Approx(0.0));
  const auto r = effective_resistances(g);
  for (Index e = 0; e < g.num_edges(); ++e) {
    CHECK(ops.resistance(g.edge(e).u, g.edge(e).v) == doctest::Approx(r[e]).epsilon(1e-12));
  }
}

TEST_CASE("random graphs against enumeration and pseudo-inverse") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = std::uniform_int_distribution<Index>(2, 8)(rng);
    const Graph g = oracle::random_connected_graph(rng, n, std::uniform_int_distribution<Index>(0, 10)(rng));
    const auto r = effective_resistances(g);
    const auto t = resistances_by_tree_enumeration(g);
    const Vector p = oracle::resistances_by_pinv(g);
    CHECK((r.values() - t.values()).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK((r.values() - p).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK(std::abs(r.values().sum() - static_cast<double>(n - 1)) <= 1e-8);
    CHECK(r.values().maxCoeff() <= 1.0 + 1e-12);
    CHECK(r.values().minCoeff() > 0.0);
  }
}

TEST_CASE("foster identity on larger graphs") {
  for (const Graph& g : {lattice_graph(30, 30), cycle_graph(200), tadpole_graph(50, 50)}) {
    const auto r = effective_resistances(g);
    CHECK(std::abs(r.values().sum() - static_cast<double>(g.num_vertices() - 1)) <= 1e-8);
  }
}

TEST_CASE("errors") {
  const Graph split(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(effective_resistances(split), GraphError);
  CHECK_THROWS_WITH_AS(require_connected(split), doctest::Contains("vertices 0 and 2"), GraphError);
  CHECK_THROWS_AS(resistances_by_tree_enumeration(complete_graph(9), 1000), SizeGuardError);
}

TEST_CASE("rescaling to dominate") {
  const Graph k4 = complete_graph(4);
  const auto r = effective_resistances(k4);
  auto [same, c1] = rescale_to_dominate(r, r);
  CHECK(c1 == doctest::Approx(1.0));
  auto [scaled, c] = rescale_to_dominate(EdgeWeighting::unit(k4), r);
  CHECK(c == doctest::Approx(0.5));
  for (Index e = 0; e < 6; ++e) CHECK(scaled[e] >= r[e] - 1e-12);

  const Graph tad = tadpole_graph(3, 4);
  CHECK(rescale_to_dominate(EdgeWeighting::unit(tad), effective_resistances(tad)).second ==
        doctest::Approx(1.0));
  Vector w = Vector::Ones(6);
  w[2] = 0.0;
  CHECK_THROWS_AS(rescale_to_dominate(EdgeWeighting(w), r), DimensionError);
}
