#include <doctest.h>

#include "l0graph/chain_exact.hpp"
#include "l0graph/errors.hpp"
#include "l0graph/expansion.hpp"
#include "oracles.hpp"

using namespace l0graph;

namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

struct Instance {
  Graph graph;
  ExpansionProblem prob;
};

// Random graph, 3-value grid {0, 1, 2}, random weights.
Instance random_instance(std::mt19937_64& rng, Index max_n) {
  const Index n = std::uniform_int_distribution<Index>(2, max_n)(rng);
  Instance inst{oracle::random_graph(rng, n, std::uniform_int_distribution<Index>(1, 20)(rng)),
                {std::cref(inst.graph), {}, {}, 0.0, {}, 0.0}};
  Vector y(n);
  std::uniform_real_distribution<double> data(-0.45, 2.45);
  for (Index i = 0; i < n; ++i) y[i] = data(rng);
  y[0] = 0.0;
  y[n - 1] = 2.0;
  Vector w(inst.graph.num_edges());
  std::uniform_real_distribution<double> wd(0.0, 2.0);
  for (Index e = 0; e < w.size(); ++e) w[e] = wd(rng);
  const double lambda = std::uniform_real_distribution<double>(0.0, 1.5)(rng);
  inst.prob = make_problem(inst.graph, EdgeWeighting(w), y, lambda, 1.0);
  return inst;
}

}  // namespace

TEST_SUITE_BEGIN("expansion");

TEST_CASE("spec chain example") {
  const Graph g = chain_graph(4);
  const auto prob = make_problem(g, EdgeWeighting::unit(g), vec({0, 0, 10, 10}), 1.0, 0.01);
  CHECK(prob.grid.lo == 0);
  CHECK(prob.grid.hi == 1000);

  SUBCASE("single expansion") {
    const auto state = LabeledSignal::constant(4, 500, prob.grid);
    const auto next = best_expansion(state, 1000, prob);
    CHECK(next.labels() == std::vector<Label>{500, 500, 1000, 1000});
  }
  SUBCASE("denoise reaches the chain optimum") {
    const auto res = denoise(prob);
    CHECK(res.signal.labels() == std::vector<Label>{0, 0, 1000, 1000});
    CHECK(res.objective == doctest::Approx(1.0));
    CHECK(exact_l0_chain(prob.y, 1.0).cost == doctest::Approx(res.objective));
  }
}

TEST_CASE("expansion to the current label changes nothing") {
  const Graph g = cycle_graph(5);
  const auto prob = make_problem(g, EdgeWeighting::unit(g), vec({0, 1, 2, 1, 0}), 0.3, 0.5);
  const auto state = LabeledSignal::constant(5, 2, prob.grid);
  CHECK(best_expansion(state, 2, prob) == state);
}

TEST_CASE("lambda zero decouples vertices") {
  const Graph g = complete_graph(4);
  const auto prob = make_problem(g, EdgeWeighting::unit(g), vec({0.1, 1.9, 1.2, 0.6}), 0.0, 1.0);
  const auto state = LabeledSignal::constant(4, 0, prob.grid);
  const auto next = best_expansion(state, 2, prob);
  // |y - 2| < |y - 0| for 1.9 and 1.2 only.
  CHECK(next.labels() == std::vector<Label>{0, 2, 2, 0});
  // Exact ties adopt the expansion label (the source side is residual-reachable only).
  const auto tie = make_problem(g, EdgeWeighting::unit(g), vec({1.0, 0.0, 2.0, 1.0}), 0.0, 1.0);
  CHECK(best_expansion(LabeledSignal::constant(4, 0, tie.grid), 2, tie)[0] == 2);
}

TEST_CASE("denoise with lambda zero rounds every vertex") {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> noise;
  const Graph g = lattice_graph(3, 4);
  Vector y(12);
  for (Index i = 0; i < 12; ++i) y[i] = noise(rng);
  const auto prob = make_problem(g, EdgeWeighting::unit(g), y, 0.0, 0.05);
  const auto res = denoise(prob);
  CHECK((res.signal.values() - y).cwiseAbs().maxCoeff() <= 0.025 + 1e-12);
}

TEST_CASE("huge lambda keeps the rounded mean") {
  const Graph g = lattice_graph(3, 3);
  const Vector y = vec({0, 3, 1, 4, 1, 5, 9, 2, 6});
  const double lambda = 9.0 * 81.0;
  const auto prob = make_problem(g, EdgeWeighting::unit(g), y, lambda, 0.1);
  const auto res = denoise(prob);
  CHECK(res.signal.is_constant());
  CHECK(res.signal[0] == prob.grid.nearest(y.mean()));
}

TEST_CASE("best expansion matches subset enumeration") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const auto inst = random_instance(rng, 10);
    const auto& prob = inst.prob;
    std::vector<Label> labels(static_cast<std::size_t>(inst.graph.num_vertices()));
    for (auto& l : labels) l = std::uniform_int_distribution<Label>(0, 2)(rng);
    const LabeledSignal state(labels, prob.grid);
    for (Label c = 0; c <= 2; ++c) {
      const auto got = best_expansion(state, c, prob);
      const auto want = oracle::best_subset_expansion(labels, c, prob, 1e-10);
      CHECK(objective(prob, got) == doctest::Approx(want.best).epsilon(1e-10));
      if (want.minimizers.size() == 1) CHECK(got.labels() == want.minimizers.front());
    }
  }
}

TEST_CASE("denoise output is a local minimizer") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    auto inst = random_instance(rng, 10);
    inst.prob.tau = trial % 3 == 0 ? 0.05 : 0.0;
    const auto res = denoise(inst.prob);
    CHECK(verify_local_min(res.signal, inst.prob, LocalMinCheck::Exhaustive));
    CHECK(verify_local_min(res.signal, inst.prob, LocalMinCheck::Cut));
    for (std::size_t k = 1; k < res.trace.size(); ++k) {
      CHECK(res.trace[k] < res.trace[k - 1]);
      if (inst.prob.tau > 0) CHECK(res.trace[k] <= res.trace[k - 1] - inst.prob.tau);
    }
  }
}

TEST_CASE("local minimum checker rejects improvable signals") {
  const Graph g = chain_graph(5);
  const auto prob = make_problem(g, EdgeWeighting::unit(g), vec({0, 0, 0, 0, 10}), 0.0, 1.0);
  const auto flat = LabeledSignal::constant(5, 0, prob.grid);
  CHECK_FALSE(verify_local_min(flat, prob, LocalMinCheck::Exhaustive));
  CHECK_FALSE(verify_local_min(flat, prob, LocalMinCheck::Cut));

  const Graph big = chain_graph(17);
  const auto big_prob = make_problem(big, EdgeWeighting::unit(big), Vector::Zero(17), 1.0, 1.0);
  CHECK_THROWS_AS(verify_local_min(LabeledSignal::constant(17, 0, big_prob.grid), big_prob), SizeGuardError);
}

TEST_CASE("global chain optimum is a local minimizer") {
  // Two flat blocks with zero-sum dyadic wiggles: the optimum is the two block
  // means, which sit on the grid, so rounding changes nothing.
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const Index n = 12;
    const Graph g = chain_graph(n);
    const double low = std::uniform_int_distribution<int>(-4, 4)(rng) * 0.25;
    const double high = low + std::uniform_int_distribution<int>(8, 16)(rng) * 0.25;
    Vector y(n);
    for (Index i = 0; i < n; ++i) y[i] = (i < 6 ? low : high) + (i % 2 == 0 ? 0.25 : -0.25);
    const double lambda = 0.5;
    const auto prob = make_problem(g, EdgeWeighting::unit(g), y, lambda, 0.25);
    const auto opt = exact_l0_chain(y, lambda);
    REQUIRE(opt.num_segments() == 2);
    const auto rounded = LabeledSignal::rounded(opt.fitted(), prob.grid);
    REQUIRE(rounded.values() == opt.fitted());
    CHECK(verify_local_min(rounded, prob, LocalMinCheck::Exhaustive));
    CHECK(denoise(prob).objective == doctest::Approx(opt.cost));
  }
}

TEST_CASE("factor-two certificate") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto inst = random_instance(rng, 10);
    const auto res = denoise(inst.prob);
    CHECK(factor2_certificate(res.signal, res.signal, inst.prob));
    CHECK(factor2_certificate(res.signal, LabeledSignal::constant(inst.graph.num_vertices(), 1, inst.prob.grid), inst.prob));
    for (int k = 0; k < 50; ++k) {
      std::vector<Label> labels(static_cast<std::size_t>(inst.graph.num_vertices()));
      for (auto& l : labels) l = std::uniform_int_distribution<Label>(0, 2)(rng);
      CHECK(factor2_certificate(res.signal, LabeledSignal(labels, inst.prob.grid), inst.prob));
    }
  }
}

TEST_CASE("problem validation") {
  const Graph g = chain_graph(3);
  CHECK_THROWS_AS(make_problem(g, EdgeWeighting::unit(g), vec({0, 1}), 1.0, 0.1), DimensionError);
  CHECK_THROWS_AS(make_problem(g, EdgeWeighting::unit(g), vec({0, 1, 2}), -1.0, 0.1), DimensionError);
  CHECK_THROWS_AS(make_problem(g, EdgeWeighting::unit(g), vec({0, 1, 2}), 1.0, 0.0), DimensionError);
  CHECK_THROWS_AS(make_problem(g, EdgeWeighting::unit(g), vec({0, 1, std::nan("")}), 1.0, 0.1), DimensionError);
  const auto prob = make_problem(g, EdgeWeighting::unit(g), vec({0, 1, 2}), 1.0, 1.0);
  CHECK_THROWS_AS(best_expansion(LabeledSignal::constant(3, 0, prob.grid), 3, prob), DimensionError);
}
