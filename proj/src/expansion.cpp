#include "l0graph/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>

#include "l0graph/objective.hpp"

namespace l0graph {

void ExpansionProblem::validate() const {
  const Graph& graph_ref = g();
  if (y.size() != graph_ref.num_vertices()) {
    throw DimensionError("data has " + std::to_string(y.size()) + " entries, graph has " +
                         std::to_string(graph_ref.num_vertices()) + " vertices");
  }
  if (!y.allFinite()) throw DimensionError("data has non-finite entries");
  require_aligned(graph_ref, weights);
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw DimensionError("lambda must be finite and nonnegative");
  }
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw DimensionError("tau must be finite and nonnegative");
  if (grid.lo > grid.hi) throw DimensionError("grid range is empty");
  if (grid.nearest(y.minCoeff()) < grid.lo || grid.nearest(y.maxCoeff()) > grid.hi) {
    throw DimensionError("grid does not cover the rounded data range");
  }
}

ExpansionProblem make_problem(const Graph& g, EdgeWeighting w, Vector y, double lambda,
                              double delta, double tau) {
  Grid grid = Grid::covering(y, delta);
  ExpansionProblem prob{std::cref(g), std::move(w), std::move(y), lambda, grid, tau};
  prob.validate();
  return prob;
}

double objective(const ExpansionProblem& prob, const LabeledSignal& sig) {
  return objective_w(prob.y, sig, prob.lambda, prob.g(), prob.weights);
}

void build_expansion_network(const LabeledSignal& state, Label c, const ExpansionProblem& prob,
                             FlowNetwork& net) {
  const Graph& g = prob.g();
  const Index n = g.num_vertices();
  if (state.size() != n) throw DimensionError("state length does not match vertex count");
  if (!prob.grid.contains(c)) {
    throw DimensionError("expansion label " + std::to_string(c) + " is outside the grid");
  }
  Index aux = 0;
  for (const auto& e : g.edges()) aux += (state[e.u] != state[e.v]) ? 1 : 0;

  const Index source = n;
  const Index sink = n + 1;
  net.reset(n + 2 + aux, source, sink);
  net.reserve_arcs(2 * n + g.num_edges() + 2 * aux);

  const double c_value = prob.grid.value(c);
  for (Index i = 0; i < n; ++i) {
    const double to_c = prob.y[i] - c_value;
    net.add_arc(source, i, 0.5 * to_c * to_c);
    if (state[i] == c) {
      net.add_arc(i, sink, FlowNetwork::infinite);
    } else {
      const double keep = prob.y[i] - state.value(i);
      net.add_arc(i, sink, 0.5 * keep * keep);
    }
  }

  Index next_aux = n + 2;
  for (Index k = 0; k < g.num_edges(); ++k) {
    const auto& e = g.edge(k);
    const double pen = prob.lambda * prob.weights[k];
    const bool i_off = state[e.u] != c;
    const bool j_off = state[e.v] != c;
    if (state[e.u] == state[e.v]) {
      if (i_off && pen > 0.0) net.add_undirected(e.u, e.v, pen);
    } else {
      const Index a = next_aux++;
      if (pen > 0.0) {
        if (i_off) net.add_undirected(e.u, a, pen);
        if (j_off) net.add_undirected(e.v, a, pen);
        net.add_arc(a, sink, pen);
      }
    }
  }
}

LabeledSignal best_expansion(const LabeledSignal& state, Label c, const ExpansionProblem& prob) {
  FlowNetwork net;
  build_expansion_network(state, c, prob, net);
  const MinCut cut = min_cut(net);
  std::vector<Label> labels = state.labels();
  for (Index i = 0; i < state.size(); ++i) {
    if (!cut.in_source_side(i)) labels[static_cast<std::size_t>(i)] = c;
  }
  return LabeledSignal(std::move(labels), state.grid());
}

namespace {

std::vector<Label> sweep_labels(const ExpansionProblem& prob) {
  std::vector<Label> order(static_cast<std::size_t>(prob.grid.count()));
  std::iota(order.begin(), order.end(), prob.grid.lo);
  switch (prob.order) {
    case SweepOrder::Ascending:
      break;
    case SweepOrder::Descending:
      std::reverse(order.begin(), order.end());
      break;
    case SweepOrder::Shuffled: {
      std::mt19937_64 rng(prob.order_seed);
      std::shuffle(order.begin(), order.end(), rng);
      break;
    }
  }
  return order;
}

}  // namespace

DenoiseResult denoise(const ExpansionProblem& prob) {
  prob.validate();
  const Index n = prob.g().num_vertices();
  const Label start = prob.grid.nearest(prob.y.mean());

  DenoiseResult result;
  result.signal = LabeledSignal::constant(n, start, prob.grid);
  result.objective = objective(prob, result.signal);
  result.trace.push_back(result.objective);

  const auto order = sweep_labels(prob);
  FlowNetwork net;
  MinCutSolver solver;
  std::vector<Label> candidate;
  // A label tried at an unchanged state would produce the same cut, so it is skipped.
  std::int64_t version = 0;
  std::vector<std::int64_t> tried_at(order.size(), -1);
  while (true) {
    bool changed = false;
    for (Label c : order) {
      auto& last = tried_at[static_cast<std::size_t>(c - prob.grid.lo)];
      if (last == version) continue;
      last = version;
      build_expansion_network(result.signal, c, prob, net);
      const MinCut& cut = solver.solve(net);
      candidate = result.signal.labels();
      bool differs = false;
      for (Index i = 0; i < n; ++i) {
        auto& l = candidate[static_cast<std::size_t>(i)];
        if (!cut.in_source_side(i) && l != c) {
          l = c;
          differs = true;
        }
      }
      if (!differs) continue;
      LabeledSignal next(candidate, prob.grid);
      const double f = objective(prob, next);
      const bool accept = prob.tau > 0.0 ? f <= result.objective - prob.tau : f < result.objective;
      if (!accept) continue;
      result.signal = std::move(next);
      result.objective = f;
      result.trace.push_back(f);
      ++result.accepted_moves;
      ++version;
      changed = true;
    }
    ++result.sweeps;
    if (!changed) break;
  }
  return result;
}

namespace {

double tolerance(double rel, double scale) { return rel * std::max(1.0, std::abs(scale)); }

}  // namespace

bool verify_local_min(const LabeledSignal& sig, const ExpansionProblem& prob, LocalMinCheck mode,
                      double rel_tol) {
  prob.validate();
  const Index n = prob.g().num_vertices();
  if (sig.size() != n) throw DimensionError("signal length does not match vertex count");
  const double f = objective(prob, sig);
  const double floor = f - prob.tau - tolerance(rel_tol, f);

  if (mode == LocalMinCheck::Cut) {
    for (Label c = prob.grid.lo; c <= prob.grid.hi; ++c) {
      if (objective(prob, best_expansion(sig, c, prob)) < floor) return false;
    }
    return true;
  }

  if (n > 16) {
    throw SizeGuardError("exhaustive local-minimum check supports at most 16 vertices, got " +
                         std::to_string(n));
  }
  std::vector<Label> labels(sig.labels());
  const std::uint32_t subsets = 1U << static_cast<unsigned>(n);
  for (Label c = prob.grid.lo; c <= prob.grid.hi; ++c) {
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
      for (Index i = 0; i < n; ++i) {
        labels[static_cast<std::size_t>(i)] = ((mask >> i) & 1U) ? c : sig[i];
      }
      const LabeledSignal expanded(labels, sig.grid());
      if (objective(prob, expanded) < floor) return false;
    }
  }
  return true;
}

bool factor2_certificate(const LabeledSignal& sig, const LabeledSignal& candidate,
                         const ExpansionProblem& prob, double rel_slack) {
  const Graph& g = prob.g();
  if (candidate.size() != g.num_vertices()) {
    throw DimensionError("candidate length does not match vertex count");
  }
  const Vector cand_values = candidate.values();
  const double rhs = half_squared_residual(prob.y, cand_values) +
                     2.0 * prob.lambda * labeled_penalty(candidate, g, prob.weights) +
                     static_cast<double>(candidate.num_distinct()) * prob.tau;
  return objective(prob, sig) <= rhs + tolerance(rel_slack, rhs);
}

}  // namespace l0graph
