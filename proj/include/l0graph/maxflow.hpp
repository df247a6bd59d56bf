#pragma once

#include <limits>
#include <memory>
#include <vector>

#include "l0graph/graph.hpp"

namespace l0graph {

/// Directed capacitated network with designated source and sink.
///
/// Arcs are stored in pairs (forward, reverse). A directed arc gets a reverse
/// partner of capacity zero; an undirected arc gets equal capacity both ways.
/// Capacities may be `FlowNetwork::infinite`; the solver replaces them with
/// (sum of finite capacities) + 1, which no minimum cut crosses whenever a
/// finite cut exists.
class FlowNetwork {
 public:
  using ArcHandle = Index;
  static constexpr double infinite = std::numeric_limits<double>::infinity();

  FlowNetwork() = default;
  FlowNetwork(Index num_nodes, Index source, Index sink);

  /// Drops all arcs and resizes, keeping allocated storage.
  void reset(Index num_nodes, Index source, Index sink);
  void reserve_arcs(Index count);

  ArcHandle add_arc(Index from, Index to, double capacity);
  ArcHandle add_undirected(Index u, Index v, double capacity);

  Index num_nodes() const { return num_nodes_; }
  Index num_arcs() const { return static_cast<Index>(tail_.size()); }
  Index source() const { return source_; }
  Index sink() const { return sink_; }

  Index tail(ArcHandle a) const { return tail_[static_cast<std::size_t>(a)]; }
  Index head(ArcHandle a) const { return head_[static_cast<std::size_t>(a)]; }
  double capacity(ArcHandle a) const { return forward_cap_[static_cast<std::size_t>(a)]; }
  double reverse_capacity(ArcHandle a) const { return reverse_cap_[static_cast<std::size_t>(a)]; }

 private:
  void check_node(Index v) const;

  Index num_nodes_ = 0;
  Index source_ = 0;
  Index sink_ = 0;
  std::vector<Index> tail_;
  std::vector<Index> head_;
  std::vector<double> forward_cap_;
  std::vector<double> reverse_cap_;
};

struct MinCut {
  /// Capacity of arcs leaving the source side (sentinel-substituted).
  double value = 0.0;
  /// Value of the maximum flow that certifies the cut.
  double flow_value = 0.0;
  /// Substitute used for infinite capacities.
  double sentinel = 0.0;
  /// Nodes reachable from the source in the final residual network.
  std::vector<char> source_side;
  /// Net flow per arc handle, tail to head; negative for undirected arcs
  /// carrying flow backwards.
  std::vector<double> arc_flow;

  bool in_source_side(Index v) const { return source_side[static_cast<std::size_t>(v)] != 0; }
  bool severs_infinite(const FlowNetwork& net) const;
};

/// Minimum s-t cut by Dinic's blocking-flow method.
///
/// Arc scan order is insertion order, so the returned source side is fully
/// determined by the network. The source side is the minimal one.
MinCut min_cut(const FlowNetwork& net);

/// Same computation as min_cut, keeping its buffers between calls.
class MinCutSolver {
 public:
  MinCutSolver();
  ~MinCutSolver();
  MinCutSolver(MinCutSolver&&) noexcept;
  MinCutSolver& operator=(MinCutSolver&&) noexcept;

  /// The reference stays valid until the next solve.
  const MinCut& solve(const FlowNetwork& net);

 private:
  class Dinic;
  std::unique_ptr<Dinic> solver_;
  MinCut cut_;
};

}  // namespace l0graph
