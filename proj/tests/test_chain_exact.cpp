#include <doctest.h>

#include "l0graph/chain_exact.hpp"
#include "l0graph/errors.hpp"
#include "l0graph/objective.hpp"
#include "oracles.hpp"

using namespace l0graph;

namespace {
Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}
}  // namespace

TEST_SUITE_BEGIN("chain_exact");

TEST_CASE("worked example") {
  const auto seg = exact_l0_chain(vec({1, 1, 5, 5, 1, 1}), 1.0);
  CHECK(seg.breakpoints == std::vector<Index>{2, 4});
  CHECK(seg.cost == doctest::Approx(2.0));
  CHECK(seg.fitted() == vec({1, 1, 5, 5, 1, 1}));
  CHECK(brute_force_chain(vec({1, 1, 5, 5, 1, 1}), 1.0).breakpoints == seg.breakpoints);
}

TEST_CASE("limits of lambda") {
  const Vector y = vec({0.3, -1.2, 2.5, 0.7, 1.1});
  const auto free_fit = exact_l0_chain(y, 0.0);
  CHECK(free_fit.num_segments() == 5);
  CHECK(free_fit.cost == 0.0);
  const double range = y.maxCoeff() - y.minCoeff();
  const auto flat = exact_l0_chain(y, 0.5 * 5 * range * range);
  CHECK(flat.num_segments() == 1);
  CHECK(flat.means[0] == doctest::Approx(y.mean()));
  const auto one = exact_l0_chain(vec({4.0}), 3.0);
  CHECK(one.num_segments() == 1);
  CHECK(one.cost == 0.0);
  const auto constant = brute_force_chain(Vector::Constant(7, 2.5), 0.1);
  CHECK(constant.num_segments() == 1);
  CHECK(constant.cost == 0.0);
}

TEST_CASE("ties prefer fewer segments then leftmost breakpoints") {
  // One split at 1 or at 2 costs the same; no split costs the same as one split.
  const Vector y = vec({0, 1, 2});
  // No split: SSE/2 = 1. Split {1}: (0) + (1,2) -> 0.25 + lambda. Split {2}: same.
  const auto seg = exact_l0_chain(y, 0.75);
  CHECK(seg.num_segments() == 1);
  const auto seg2 = exact_l0_chain(y, 0.5);
  CHECK(seg2.breakpoints == std::vector<Index>{1});
  CHECK(brute_force_chain(y, 0.5).breakpoints == std::vector<Index>{1});
}

TEST_CASE("matches brute force and an independent cost oracle") {
  std::mt19937_64 rng(123);
  std::normal_distribution<double> noise;
  for (int trial = 0; trial < 300; ++trial) {
    const Index n = std::uniform_int_distribution<Index>(1, 11)(rng);
    Vector y(n);
    const bool integer = trial % 4 == 0;
    for (Index i = 0; i < n; ++i) y[i] = integer ? std::round(2.0 * noise(rng)) : noise(rng) + (i > n / 2 ? 2.0 : 0.0);
    const double lambda = std::uniform_real_distribution<double>(0.0, 2.0)(rng);
    const auto dp = exact_l0_chain(y, lambda);
    const auto pruned = exact_l0_chain(y, lambda, true);
    const auto brute = brute_force_chain(y, lambda);
    CHECK(dp.cost == doctest::Approx(brute.cost).epsilon(1e-10));
    CHECK(dp.breakpoints == brute.breakpoints);
    CHECK(pruned.breakpoints == dp.breakpoints);
    CHECK(dp.cost == doctest::Approx(oracle::chain_brute_cost(y, lambda)).epsilon(1e-10));
    CHECK(objective_l0(y, dp.fitted(), lambda, chain_graph(n)) == doctest::Approx(dp.cost).epsilon(1e-10));
  }
}

TEST_CASE("optimality against random candidates") {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> noise;
  const Index n = 40;
  Vector y(n);
  for (Index i = 0; i < n; ++i) y[i] = noise(rng) + (i / 10 % 2) * 3.0;
  const auto seg = exact_l0_chain(y, 1.5);
  const Graph g = chain_graph(n);
  for (int k = 0; k < 500; ++k) {
    Vector mu = seg.fitted();
    const Index i = std::uniform_int_distribution<Index>(0, n - 1)(rng);
    const Index len = std::uniform_int_distribution<Index>(1, 8)(rng);
    mu.segment(i, std::min(len, n - i)).array() += 0.3 * noise(rng);
    CHECK(seg.cost <= objective_l0(y, mu, 1.5, g) + 1e-10);
  }
}

TEST_CASE("pruning agrees on long chains") {
  std::mt19937_64 rng(55);
  std::normal_distribution<double> noise;
  for (int trial = 0; trial < 10; ++trial) {
    const Index n = 400;
    Vector y(n);
    for (Index i = 0; i < n; ++i) y[i] = 0.5 * noise(rng) + (i / 40 % 2);
    const double lambda = 0.1 + 0.3 * trial;
    const auto a = exact_l0_chain(y, lambda);
    const auto b = exact_l0_chain(y, lambda, true);
    CHECK(a.breakpoints == b.breakpoints);
    CHECK(a.cost == doctest::Approx(b.cost).epsilon(1e-12));
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(exact_l0_chain(Vector(0), 1.0), DimensionError);
  CHECK_THROWS_AS(exact_l0_chain(vec({1, 2}), -1.0), DimensionError);
  CHECK_THROWS_AS(brute_force_chain(Vector::Zero(17), 1.0), SizeGuardError);
}
