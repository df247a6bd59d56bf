#include <doctest.h>

#include "l0graph/errors.hpp"
#include "l0graph/maxflow.hpp"
#include "oracles.hpp"

using namespace l0graph;

namespace {

// Conservation at internal nodes and 0 <= flow <= capacity on every arc.
void check_certificate(const FlowNetwork& net, const MinCut& cut) {
  std::vector<double> balance(static_cast<std::size_t>(net.num_nodes()), 0.0);
  const double tol = 1e-9 * std::max(1.0, cut.sentinel);
  for (Index a = 0; a < net.num_arcs(); ++a) {
    const double f = cut.arc_flow[static_cast<std::size_t>(a)];
    const double fwd = std::isinf(net.capacity(a)) ? cut.sentinel : net.capacity(a);
    const double rev = std::isinf(net.reverse_capacity(a)) ? cut.sentinel : net.reverse_capacity(a);
    CHECK(f <= fwd + tol);
    CHECK(-f <= rev + tol);
    balance[static_cast<std::size_t>(net.tail(a))] -= f;
    balance[static_cast<std::size_t>(net.head(a))] += f;
  }
  for (Index v = 0; v < net.num_nodes(); ++v) {
    if (v == net.source() || v == net.sink()) continue;
    CHECK(std::abs(balance[static_cast<std::size_t>(v)]) <= tol);
  }
  CHECK(balance[static_cast<std::size_t>(net.sink())] == doctest::Approx(cut.flow_value).epsilon(1e-9));
  CHECK(cut.value == doctest::Approx(cut.flow_value).epsilon(1e-9));
}

// Capacity of the arcs leaving the returned source side.
double side_capacity(const FlowNetwork& net, const MinCut& cut) {
  double total = 0.0;
  for (Index a = 0; a < net.num_arcs(); ++a) {
    const bool t_in = cut.in_source_side(net.tail(a));
    const bool h_in = cut.in_source_side(net.head(a));
    if (t_in && !h_in) total += net.capacity(a);
    if (h_in && !t_in) total += net.reverse_capacity(a);
  }
  return total;
}

}  // namespace

TEST_SUITE_BEGIN("maxflow");

TEST_CASE("small networks") {
  SUBCASE("single arc") {
    FlowNetwork net(2, 0, 1);
    net.add_arc(0, 1, 5.0);
    const MinCut cut = min_cut(net);
    CHECK(cut.value == 5.0);
    CHECK(cut.in_source_side(0));
    CHECK_FALSE(cut.in_source_side(1));
  }
  SUBCASE("undirected arc") {
    FlowNetwork net(2, 0, 1);
    net.add_undirected(0, 1, 3.0);
    CHECK(min_cut(net).value == 3.0);
  }
  SUBCASE("parallel arcs") {
    FlowNetwork net(2, 0, 1);
    net.add_arc(0, 1, 1.0);
    net.add_arc(0, 1, 2.0);
    CHECK(min_cut(net).value == 3.0);
  }
  SUBCASE("diamond") {
    // s=0, a=1, b=2, t=3
    FlowNetwork net(4, 0, 3);
    net.add_arc(0, 1, 3.0);
    net.add_arc(0, 2, 2.0);
    net.add_arc(1, 3, 2.0);
    net.add_arc(2, 3, 3.0);
    net.add_undirected(1, 2, 1.0);
    // Source sides {s}, {s,a}, {s,b}, {s,a,b} cost 5, 5, 7, 5.
    const MinCut cut = min_cut(net);
    CHECK(oracle::enumerate_min_cut(net) == 5.0);
    CHECK(cut.value == doctest::Approx(5.0));
    check_certificate(net, cut);
  }
  SUBCASE("zero capacity arc is never needed") {
    FlowNetwork net(3, 0, 2);
    net.add_arc(0, 1, 0.0);
    net.add_arc(1, 2, 7.0);
    const MinCut cut = min_cut(net);
    CHECK(cut.value == 0.0);
    CHECK_FALSE(cut.in_source_side(1));
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(FlowNetwork(2, 0, 0), GraphError);
  FlowNetwork net(3, 0, 2);
  CHECK_THROWS_AS(net.add_arc(0, 3, 1.0), GraphError);
  CHECK_THROWS_AS(net.add_arc(0, 1, -1.0), DimensionError);
}

TEST_CASE("random networks against cut enumeration") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> cap(0.0, 4.0);
  for (int trial = 0; trial < 300; ++trial) {
    const Index n = std::uniform_int_distribution<Index>(2, 12)(rng);
    FlowNetwork net(n, 0, n - 1);
    const Index arcs = std::uniform_int_distribution<Index>(1, 3 * n)(rng);
    std::uniform_int_distribution<Index> node(0, n - 1);
    for (Index k = 0; k < arcs; ++k) {
      const Index u = node(rng), v = node(rng);
      if (u == v) continue;
      double c = cap(rng);
      if (trial % 5 == 0 && k % 7 == 0) c = FlowNetwork::infinite;
      if (k % 3 == 0) {
        net.add_undirected(u, v, c);
      } else {
        net.add_arc(u, v, c);
      }
    }
    const MinCut cut = min_cut(net);
    const double expect = oracle::enumerate_min_cut(net);
    if (std::isinf(expect)) {
      CHECK(cut.severs_infinite(net));
      continue;
    }
    CHECK(cut.value == doctest::Approx(expect).epsilon(1e-9));
    CHECK(side_capacity(net, cut) == doctest::Approx(expect).epsilon(1e-9));
    CHECK_FALSE(cut.severs_infinite(net));
    CHECK(cut.in_source_side(0));
    CHECK_FALSE(cut.in_source_side(n - 1));
    check_certificate(net, cut);
    CHECK(min_cut(net).source_side == cut.source_side);
  }
}

TEST_CASE("source side is the minimal one") {
  // Two equal minimum cuts: {s} and {s, a}. The residual-reachable side is {s}.
  FlowNetwork net(3, 0, 2);
  net.add_arc(0, 1, 1.0);
  net.add_arc(1, 2, 1.0);
  const MinCut cut = min_cut(net);
  CHECK(cut.value == 1.0);
  CHECK_FALSE(cut.in_source_side(1));
}
