#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "l0graph/graph.hpp"
#include "l0graph/maxflow.hpp"

namespace l0graph {

enum class SweepOrder { Ascending, Descending, Shuffled };

/// Inputs of the weighted l0 problem over a value grid.
///
/// Holds a non-owning reference to the graph; the graph must outlive it.
struct ExpansionProblem {
  std::reference_wrapper<const Graph> graph;
  EdgeWeighting weights;
  Vector y;
  double lambda = 0.0;
  Grid grid;
  double tau = 0.0;
  SweepOrder order = SweepOrder::Ascending;
  std::uint64_t order_seed = 0;

  const Graph& g() const { return graph.get(); }
  /// Throws DimensionError on shape or range violations.
  void validate() const;
};

/// Problem with grid [round(min y), round(max y)] at spacing `delta`.
ExpansionProblem make_problem(const Graph& g, EdgeWeighting w, Vector y, double lambda,
                              double delta, double tau = 0.0);

double objective(const ExpansionProblem& prob, const LabeledSignal& sig);

/// Augmented network whose minimum cut selects the best expansion to label c.
/// Node i < n is vertex i; then source, sink, and one auxiliary node per edge
/// whose endpoints currently differ.
void build_expansion_network(const LabeledSignal& state, Label c, const ExpansionProblem& prob,
                             FlowNetwork& net);

/// Lowest-objective expansion of `state` to label `c`: vertices on the sink
/// side of the canonical minimum cut take c, all others keep their label.
LabeledSignal best_expansion(const LabeledSignal& state, Label c, const ExpansionProblem& prob);

struct DenoiseResult {
  LabeledSignal signal;
  double objective = 0.0;
  Index sweeps = 0;
  Index accepted_moves = 0;
  /// Objective after initialization and after every accepted move.
  std::vector<double> trace;
};

/// Outer expansion loop started from the rounded mean. A move is accepted when
/// it lowers the objective by at least tau (strictly, when tau == 0). Stops
/// after a full sweep over the grid without an accepted move.
DenoiseResult denoise(const ExpansionProblem& prob);

enum class LocalMinCheck { Exhaustive, Cut };

/// True if no expansion to a grid label lowers the objective by more than tau
/// (+ rel_tol * max(1, |F|)). Exhaustive mode enumerates every vertex subset
/// and refuses graphs above 16 vertices.
bool verify_local_min(const LabeledSignal& sig, const ExpansionProblem& prob,
                      LocalMinCheck mode = LocalMinCheck::Exhaustive, double rel_tol = 1e-10);

/// F(sig) <= 0.5 ||y - c||^2 + 2 lambda ||Dc||_w + k tau for the candidate c
/// with k distinct values, up to rel_slack * max(1, |rhs|).
bool factor2_certificate(const LabeledSignal& sig, const LabeledSignal& candidate,
                         const ExpansionProblem& prob, double rel_slack = 1e-9);

}  // namespace l0graph
