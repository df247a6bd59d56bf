#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "l0graph/errors.hpp"

namespace l0graph {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using Label = std::int64_t;

/// Undirected edge with canonical orientation u < v.
struct Edge {
  Index u;
  Index v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph.
///
/// The edge list is canonicalized at construction (u < v, sorted
/// lexicographically). Every per-edge array in the library is aligned to this
/// order, and all edge sums run over it left to right. Self-loops and
/// duplicate edges are rejected with GraphError.
class Graph {
 public:
  struct Incidence {
    Index neighbor;
    Index edge;
  };

  Graph() = default;
  Graph(Index num_vertices, std::vector<Edge> edges);

  Index num_vertices() const { return n_; }
  Index num_edges() const { return static_cast<Index>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(Index e) const { return edges_[static_cast<std::size_t>(e)]; }

  std::span<const Incidence> incident(Index v) const;
  Index degree(Index v) const;

  /// Component id per vertex, numbered by smallest member vertex.
  std::vector<Index> component_labels() const;
  Index num_components() const;
  bool is_connected() const { return num_components() == 1; }

  /// Vertices in path order if the graph is a simple path (connected, n - 1
  /// edges, max degree 2), starting from the lower-numbered endpoint.
  std::optional<std::vector<Index>> chain_order() const;

  std::optional<Index> find_edge(Index a, Index b) const;

 private:
  Index n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Index> offsets_;
  std::vector<Incidence> adjacency_;
};

Graph chain_graph(Index n);
Graph cycle_graph(Index n);
Graph complete_graph(Index n);
/// 4-neighbour lattice; vertex (r, c) has id r * cols + c.
Graph lattice_graph(Index rows, Index cols);
/// Chain of `chain_length` vertices (ids 0..chain_length-1) whose last vertex
/// is joined by one edge to the first vertex of a clique on the remaining ids.
Graph tadpole_graph(Index chain_length, Index clique_size);

/// Nonnegative per-edge multipliers aligned with Graph::edges().
class EdgeWeighting {
 public:
  EdgeWeighting() = default;
  explicit EdgeWeighting(Vector weights);

  static EdgeWeighting unit(const Graph& g);

  Index size() const { return weights_.size(); }
  double operator[](Index e) const { return weights_[e]; }
  const Vector& values() const { return weights_; }

 private:
  Vector weights_;
};

void require_aligned(const Graph& g, const EdgeWeighting& w);

/// Uniform value grid origin + k * spacing for k in [lo, hi].
struct Grid {
  double origin = 0.0;
  double spacing = 1.0;
  Label lo = 0;
  Label hi = 0;

  Grid() = default;
  Grid(double spacing, Label lo, Label hi, double origin = 0.0);

  /// Smallest grid containing the rounded minimum and maximum of `y`.
  static Grid covering(const Vector& y, double spacing, double origin = 0.0);

  double value(Label k) const { return origin + static_cast<double>(k) * spacing; }
  /// Index of the nearest multiple; halves round away from zero.
  Label nearest(double x) const;
  bool contains(Label k) const { return k >= lo && k <= hi; }
  Label count() const { return hi - lo + 1; }

  friend bool operator==(const Grid&, const Grid&) = default;
};

/// Per-vertex grid labels. Value equality between vertices is label equality.
class LabeledSignal {
 public:
  LabeledSignal() = default;
  LabeledSignal(std::vector<Label> labels, Grid grid);

  static LabeledSignal constant(Index n, Label label, const Grid& grid);
  /// Rounds every entry to the nearest grid point; entries that land outside
  /// [grid.lo, grid.hi] raise DimensionError.
  static LabeledSignal rounded(const Vector& values, const Grid& grid);

  Index size() const { return static_cast<Index>(labels_.size()); }
  Label operator[](Index i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<Label>& labels() const { return labels_; }
  const Grid& grid() const { return grid_; }

  double value(Index i) const { return grid_.value((*this)[i]); }
  Vector values() const;
  Index num_distinct() const;
  bool is_constant() const;

  friend bool operator==(const LabeledSignal&, const LabeledSignal&) = default;

 private:
  std::vector<Label> labels_;
  Grid grid_;
};

/// Multi-cut: block id per vertex (0..k-1, numbered by first appearance) and
/// the sorted indices of edges whose endpoints lie in different blocks.
struct Partition {
  std::vector<Index> block;
  Index num_blocks = 0;
  std::vector<Index> boundary;
};

/// Groups vertices by label equality. Blocks need not be connected.
Partition induced_partition(const LabeledSignal& sig, const Graph& g);

/// Groups vertices by exact equality of real values.
Partition induced_partition(const Vector& mu, const Graph& g);

/// Sum of w over the boundary edges, in edge order.
double cut_weight(const Partition& p, const EdgeWeighting& w);

}  // namespace l0graph
