#include "l0graph/resistance.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace l0graph {

Eigen::MatrixXd laplacian(const Graph& g) {
  const Index n = g.num_vertices();
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    L(e.u, e.u) += 1.0;
    L(e.v, e.v) += 1.0;
    L(e.u, e.v) -= 1.0;
    L(e.v, e.u) -= 1.0;
  }
  return L;
}

void require_connected(const Graph& g) {
  const auto comp = g.component_labels();
  for (std::size_t v = 0; v < comp.size(); ++v) {
    if (comp[v] != 0) {
      throw GraphError("graph is disconnected: vertices 0 and " + std::to_string(v) +
                       " lie in different components");
    }
  }
}

LaplacianOps::LaplacianOps(const Graph& g) : laplacian_(laplacian(g)) {
  require_connected(g);
  const Index n = g.num_vertices();
  const Eigen::MatrixXd shifted =
      laplacian_ + Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
  factor_.compute(shifted);
  if (factor_.info() != Eigen::Success) {
    throw SolverError("Cholesky factorization of the shifted Laplacian failed");
  }
}

double LaplacianOps::resistance(Index i, Index j) const {
  Eigen::VectorXd b = Eigen::VectorXd::Zero(laplacian_.rows());
  b[i] = 1.0;
  b[j] = -1.0;
  const Eigen::VectorXd x = factor_.solve(b);
  return x[i] - x[j];
}

EdgeWeighting effective_resistances(const Graph& g) {
  require_connected(g);
  const Index n = g.num_vertices();
  const Index m = g.num_edges();
  Vector r(m);
  if (m == 0) return EdgeWeighting(r);

  const LaplacianOps ops(g);
  // Incidence columns solved in blocks to bound the dense right-hand side.
  constexpr Index kBlock = 256;
  for (Index first = 0; first < m; first += kBlock) {
    const Index cols = std::min(kBlock, m - first);
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(n, cols);
    for (Index k = 0; k < cols; ++k) {
      const auto& e = g.edge(first + k);
      rhs(e.u, k) = 1.0;
      rhs(e.v, k) = -1.0;
    }
    const Eigen::MatrixXd x = ops.solve(rhs);
    for (Index k = 0; k < cols; ++k) {
      const auto& e = g.edge(first + k);
      r[first + k] = x(e.u, k) - x(e.v, k);
    }
  }
  return EdgeWeighting(r);
}

double spanning_tree_count(const Graph& g) {
  const Index n = g.num_vertices();
  if (n == 1) return 1.0;
  const Eigen::MatrixXd L = laplacian(g);
  const double det = L.bottomRightCorner(n - 1, n - 1).partialPivLu().determinant();
  return std::max(0.0, std::round(det));
}

namespace {

// Union-find with union by size and no path compression, so unions can be
// rolled back in LIFO order.
class RollbackDsu {
 public:
  explicit RollbackDsu(Index n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
    std::iota(parent_.begin(), parent_.end(), Index{0});
  }

  Index find(Index v) const {
    while (parent_[static_cast<std::size_t>(v)] != v) v = parent_[static_cast<std::size_t>(v)];
    return v;
  }

  bool unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    history_.push_back(b);
    return true;
  }

  void undo() {
    const Index b = history_.back();
    history_.pop_back();
    const Index a = parent_[static_cast<std::size_t>(b)];
    size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
    parent_[static_cast<std::size_t>(b)] = b;
  }

 private:
  std::vector<Index> parent_;
  std::vector<Index> size_;
  std::vector<Index> history_;
};

class TreeEnumerator {
 public:
  explicit TreeEnumerator(const Graph& g)
      : g_(g), dsu_(g.num_vertices()), in_tree_(static_cast<std::size_t>(g.num_edges()), 0),
        hits_(static_cast<std::size_t>(g.num_edges()), 0) {}

  void run() { visit(0, 0); }

  std::int64_t trees() const { return trees_; }
  const std::vector<std::int64_t>& hits() const { return hits_; }

 private:
  // Edges [0, k) are decided; `chosen` of them are in the tree.
  void visit(Index k, Index chosen) {
    if (chosen == g_.num_vertices() - 1) {
      ++trees_;
      for (std::size_t e = 0; e < in_tree_.size(); ++e) hits_[e] += in_tree_[e];
      return;
    }
    if (k == g_.num_edges()) return;
    const auto& e = g_.edge(k);
    if (dsu_.unite(e.u, e.v)) {
      in_tree_[static_cast<std::size_t>(k)] = 1;
      visit(k + 1, chosen + 1);
      in_tree_[static_cast<std::size_t>(k)] = 0;
      dsu_.undo();
    }
    if (can_still_span(k + 1)) visit(k + 1, chosen);
  }

  // Whether the chosen edges plus all edges from `first` on connect the graph.
  bool can_still_span(Index first) {
    Index merged = 0;
    for (Index k = first; k < g_.num_edges(); ++k) {
      if (dsu_.unite(g_.edge(k).u, g_.edge(k).v)) ++merged;
    }
    const Index root = dsu_.find(0);
    bool spans = true;
    for (Index v = 1; v < g_.num_vertices() && spans; ++v) spans = dsu_.find(v) == root;
    for (Index i = 0; i < merged; ++i) dsu_.undo();
    return spans;
  }

  const Graph& g_;
  RollbackDsu dsu_;
  std::vector<std::int64_t> in_tree_;
  std::vector<std::int64_t> hits_;
  std::int64_t trees_ = 0;
};

}  // namespace

EdgeWeighting resistances_by_tree_enumeration(const Graph& g, std::int64_t max_trees) {
  require_connected(g);
  const double expected = spanning_tree_count(g);
  if (expected > static_cast<double>(max_trees)) {
    throw SizeGuardError("graph has " + std::to_string(expected) +
                         " spanning trees, above the enumeration limit of " +
                         std::to_string(max_trees));
  }
  TreeEnumerator walker(g);
  walker.run();
  if (static_cast<double>(walker.trees()) != expected) {
    throw SolverError("spanning-tree enumeration found " + std::to_string(walker.trees()) +
                      " trees, matrix-tree theorem gives " + std::to_string(expected));
  }
  Vector r(g.num_edges());
  for (Index e = 0; e < g.num_edges(); ++e) {
    r[e] = static_cast<double>(walker.hits()[static_cast<std::size_t>(e)]) /
           static_cast<double>(walker.trees());
  }
  return EdgeWeighting(r);
}

std::pair<EdgeWeighting, double> rescale_to_dominate(const EdgeWeighting& w, const EdgeWeighting& r) {
  if (w.size() != r.size()) throw DimensionError("weightings have different lengths");
  double c = 0.0;
  for (Index e = 0; e < w.size(); ++e) {
    if (w[e] == 0.0) {
      if (r[e] > 0.0) {
        throw DimensionError("edge " + std::to_string(e) +
                             " has zero weight but positive resistance; no scaling dominates");
      }
      continue;
    }
    c = std::max(c, r[e] / w[e]);
  }
  return {EdgeWeighting(c * w.values()), c};
}

}  // namespace l0graph
