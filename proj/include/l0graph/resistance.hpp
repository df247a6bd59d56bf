#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include <cstdint>
#include <utility>

#include "l0graph/graph.hpp"

namespace l0graph {

/// Dense unweighted Laplacian L = D - A.
Eigen::MatrixXd laplacian(const Graph& g);

/// Solves L x = b for b orthogonal to the all-ones vector, returning the
/// solution orthogonal to all-ones (x = L^+ b). Factors L + (1/n) 11^T, which
/// is positive definite for a connected graph.
class LaplacianOps {
 public:
  explicit LaplacianOps(const Graph& g);

  const Eigen::MatrixXd& matrix() const { return laplacian_; }

  template <typename Derived>
  Eigen::MatrixXd solve(const Eigen::MatrixBase<Derived>& rhs) const {
    return factor_.solve(rhs);
  }

  /// (e_i - e_j)^T L^+ (e_i - e_j).
  double resistance(Index i, Index j) const;

 private:
  Eigen::MatrixXd laplacian_;
  Eigen::LLT<Eigen::MatrixXd> factor_;
};

/// Throws GraphError naming two vertices in different components.
void require_connected(const Graph& g);

/// Effective resistance of every edge; each lies in (0, 1] and they sum to n - 1.
EdgeWeighting effective_resistances(const Graph& g);

/// Spanning-tree count by the matrix-tree theorem (determinant of a reduced
/// Laplacian, rounded).
double spanning_tree_count(const Graph& g);

/// Fraction of spanning trees containing each edge, by exhaustive
/// enumeration. Refuses graphs with more than `max_trees` spanning trees.
EdgeWeighting resistances_by_tree_enumeration(const Graph& g, std::int64_t max_trees = 1000000);

/// Smallest c with c * w >= r edgewise; returns (c * w, c).
std::pair<EdgeWeighting, double> rescale_to_dominate(const EdgeWeighting& w, const EdgeWeighting& r);

}  // namespace l0graph
