#pragma once

#include <Eigen/Core>

#include <cmath>
#include <string>

#include "l0graph/graph.hpp"

namespace l0graph {

namespace detail {

template <typename DerivedA, typename DerivedB>
void require_same_length(const Eigen::MatrixBase<DerivedA>& a,
                         const Eigen::MatrixBase<DerivedB>& b, const Graph& g) {
  if (a.size() != g.num_vertices() || b.size() != g.num_vertices()) {
    throw DimensionError("signal lengths " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()) + " do not match vertex count " +
                         std::to_string(g.num_vertices()));
  }
}

}  // namespace detail

/// 0.5 * ||y - mu||^2, summed in index order.
template <typename DerivedY, typename DerivedMu>
double half_squared_residual(const Eigen::MatrixBase<DerivedY>& y,
                             const Eigen::MatrixBase<DerivedMu>& mu) {
  double total = 0.0;
  for (Index i = 0; i < y.size(); ++i) {
    const double d = static_cast<double>(y[i]) - static_cast<double>(mu[i]);
    total += d * d;
  }
  return 0.5 * total;
}

/// Weighted count of edges whose endpoints differ, in edge order.
template <typename DerivedMu>
double weighted_cut(const Eigen::MatrixBase<DerivedMu>& mu, const Graph& g,
                    const EdgeWeighting& w) {
  double total = 0.0;
  for (Index e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(e);
    if (mu[ed.u] != mu[ed.v]) total += w[e];
  }
  return total;
}

template <typename DerivedMu>
Index cut_count(const Eigen::MatrixBase<DerivedMu>& mu, const Graph& g) {
  Index count = 0;
  for (const auto& ed : g.edges()) count += (mu[ed.u] != mu[ed.v]) ? 1 : 0;
  return count;
}

template <typename DerivedMu>
double total_variation(const Eigen::MatrixBase<DerivedMu>& mu, const Graph& g) {
  double total = 0.0;
  for (const auto& ed : g.edges()) {
    total += std::abs(static_cast<double>(mu[ed.u]) - static_cast<double>(mu[ed.v]));
  }
  return total;
}

/// 0.5 ||y - mu||^2 + lambda * #{edges with mu_i != mu_j}.
template <typename DerivedY, typename DerivedMu>
double objective_l0(const Eigen::MatrixBase<DerivedY>& y, const Eigen::MatrixBase<DerivedMu>& mu,
                    double lambda, const Graph& g) {
  detail::require_same_length(y, mu, g);
  return half_squared_residual(y, mu) + lambda * static_cast<double>(cut_count(mu, g));
}

/// 0.5 ||y - mu||^2 + lambda * sum of w over edges with mu_i != mu_j.
template <typename DerivedY, typename DerivedMu>
double objective_w(const Eigen::MatrixBase<DerivedY>& y, const Eigen::MatrixBase<DerivedMu>& mu,
                   double lambda, const Graph& g, const EdgeWeighting& w) {
  detail::require_same_length(y, mu, g);
  require_aligned(g, w);
  return half_squared_residual(y, mu) + lambda * weighted_cut(mu, g, w);
}

/// 0.5 ||y - mu||^2 + lambda * sum |mu_i - mu_j|.
template <typename DerivedY, typename DerivedMu>
double objective_tv(const Eigen::MatrixBase<DerivedY>& y, const Eigen::MatrixBase<DerivedMu>& mu,
                    double lambda, const Graph& g) {
  detail::require_same_length(y, mu, g);
  return half_squared_residual(y, mu) + lambda * total_variation(mu, g);
}

// Grid-labelled signals decide edge inequality on integer labels.
double labeled_penalty(const LabeledSignal& sig, const Graph& g, const EdgeWeighting& w);
double objective_l0(const Vector& y, const LabeledSignal& mu, double lambda, const Graph& g);
double objective_w(const Vector& y, const LabeledSignal& mu, double lambda, const Graph& g,
                   const EdgeWeighting& w);

}  // namespace l0graph
