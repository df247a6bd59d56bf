#include "l0graph/objective.hpp"

namespace l0graph {

namespace {

void require_signal(const Vector& y, const LabeledSignal& mu, const Graph& g) {
  if (y.size() != g.num_vertices() || mu.size() != g.num_vertices()) {
    throw DimensionError("signal lengths " + std::to_string(y.size()) + " and " +
                         std::to_string(mu.size()) + " do not match vertex count " +
                         std::to_string(g.num_vertices()));
  }
}

double labeled_residual(const Vector& y, const LabeledSignal& mu) {
  double total = 0.0;
  for (Index i = 0; i < y.size(); ++i) {
    const double d = y[i] - mu.value(i);
    total += d * d;
  }
  return 0.5 * total;
}

}  // namespace

double labeled_penalty(const LabeledSignal& sig, const Graph& g, const EdgeWeighting& w) {
  double total = 0.0;
  for (Index e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(e);
    if (sig[ed.u] != sig[ed.v]) total += w[e];
  }
  return total;
}

double objective_l0(const Vector& y, const LabeledSignal& mu, double lambda, const Graph& g) {
  require_signal(y, mu, g);
  Index cuts = 0;
  for (const auto& ed : g.edges()) cuts += (mu[ed.u] != mu[ed.v]) ? 1 : 0;
  return labeled_residual(y, mu) + lambda * static_cast<double>(cuts);
}

double objective_w(const Vector& y, const LabeledSignal& mu, double lambda, const Graph& g,
                   const EdgeWeighting& w) {
  require_signal(y, mu, g);
  require_aligned(g, w);
  return labeled_residual(y, mu) + lambda * labeled_penalty(mu, g, w);
}

}  // namespace l0graph
