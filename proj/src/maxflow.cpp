#include "l0graph/maxflow.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace l0graph {

FlowNetwork::FlowNetwork(Index num_nodes, Index source, Index sink) {
  reset(num_nodes, source, sink);
}

void FlowNetwork::reset(Index num_nodes, Index source, Index sink) {
  if (num_nodes < 2) throw GraphError("flow network needs at least two nodes");
  num_nodes_ = num_nodes;
  check_node(source);
  check_node(sink);
  if (source == sink) throw GraphError("source and sink must differ");
  source_ = source;
  sink_ = sink;
  tail_.clear();
  head_.clear();
  forward_cap_.clear();
  reverse_cap_.clear();
}

void FlowNetwork::reserve_arcs(Index count) {
  const auto c = static_cast<std::size_t>(count);
  tail_.reserve(c);
  head_.reserve(c);
  forward_cap_.reserve(c);
  reverse_cap_.reserve(c);
}

void FlowNetwork::check_node(Index v) const {
  if (v < 0 || v >= num_nodes_) {
    throw GraphError("node " + std::to_string(v) + " outside [0, " +
                     std::to_string(num_nodes_) + ")");
  }
}

FlowNetwork::ArcHandle FlowNetwork::add_arc(Index from, Index to, double capacity) {
  check_node(from);
  check_node(to);
  if (!(capacity >= 0.0) || std::isnan(capacity)) {
    throw DimensionError("arc capacity must be nonnegative");
  }
  tail_.push_back(from);
  head_.push_back(to);
  forward_cap_.push_back(capacity);
  reverse_cap_.push_back(0.0);
  return num_arcs() - 1;
}

FlowNetwork::ArcHandle FlowNetwork::add_undirected(Index u, Index v, double capacity) {
  const ArcHandle a = add_arc(u, v, capacity);
  reverse_cap_.back() = capacity;
  return a;
}

bool MinCut::severs_infinite(const FlowNetwork& net) const {
  for (Index a = 0; a < net.num_arcs(); ++a) {
    const bool tail_s = in_source_side(net.tail(a));
    const bool head_s = in_source_side(net.head(a));
    if (tail_s && !head_s && std::isinf(net.capacity(a))) return true;
    if (!tail_s && head_s && std::isinf(net.reverse_capacity(a))) return true;
  }
  return false;
}

// Residual arcs live at 2a (forward) and 2a + 1 (reverse).
class MinCutSolver::Dinic {
 public:
  void load(const FlowNetwork& net) {
    net_ = &net;
    const auto m = static_cast<std::size_t>(net.num_arcs());
    const auto n = static_cast<std::size_t>(net.num_nodes());
    double finite_sum = 0.0;
    double finite_max = 0.0;
    for (std::size_t a = 0; a < m; ++a) {
      for (double c : {net.capacity(static_cast<Index>(a)), net.reverse_capacity(static_cast<Index>(a))}) {
        if (std::isfinite(c)) {
          finite_sum += c;
          finite_max = std::max(finite_max, c);
        }
      }
    }
    sentinel_ = finite_sum + 1.0;
    eps_ = 1e-13 * std::max(finite_max, 1e-300);

    residual_.resize(2 * m);
    to_.resize(2 * m);
    offsets_.assign(n + 1, 0);
    for (std::size_t a = 0; a < m; ++a) {
      const auto ai = static_cast<Index>(a);
      residual_[2 * a] = substitute(net.capacity(ai));
      residual_[2 * a + 1] = substitute(net.reverse_capacity(ai));
      to_[2 * a] = net.head(ai);
      to_[2 * a + 1] = net.tail(ai);
      ++offsets_[static_cast<std::size_t>(net.tail(ai)) + 1];
      ++offsets_[static_cast<std::size_t>(net.head(ai)) + 1];
    }
    for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
    adjacency_.resize(2 * m);
    std::vector<std::size_t>& fill = cursor_;
    fill.assign(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t a = 0; a < m; ++a) {
      adjacency_[fill[static_cast<std::size_t>(net.tail(static_cast<Index>(a)))]++] = 2 * a;
      adjacency_[fill[static_cast<std::size_t>(net.head(static_cast<Index>(a)))]++] = 2 * a + 1;
    }
    level_.resize(n);
    cursor_.resize(n);
  }

  double sentinel() const { return sentinel_; }

  double run() {
    double total = push_two_arc_paths();
    const auto s = static_cast<std::size_t>(net_->source());
    while (build_levels()) {
      std::copy(offsets_.begin(), offsets_.end() - 1, cursor_.begin());
      while (true) {
        const double pushed = augment(s, std::numeric_limits<double>::infinity());
        if (pushed <= 0.0) break;
        total += pushed;
      }
    }
    return total;
  }

  void reachable_from_source(std::vector<char>& seen) {
    seen.assign(level_.size(), 0);
    std::vector<std::size_t>& stack = queue_;
    stack.assign(1, static_cast<std::size_t>(net_->source()));
    seen[stack.back()] = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t k = offsets_[v]; k < offsets_[v + 1]; ++k) {
        const std::size_t a = adjacency_[k];
        const auto w = static_cast<std::size_t>(to_[a]);
        if (!seen[w] && residual_[a] > eps_) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }

  double residual(std::size_t a) const { return residual_[a]; }
  double substitute(double c) const { return std::isinf(c) ? sentinel_ : c; }

 private:
  // Saturates every s -> v -> t path directly; terminal-heavy networks such as
  // expansion moves carry most of their flow this way.
  double push_two_arc_paths() {
    const auto s = static_cast<std::size_t>(net_->source());
    const auto t = static_cast<Index>(net_->sink());
    std::vector<std::size_t>& to_sink = queue_;
    to_sink.assign(level_.size(), std::numeric_limits<std::size_t>::max());
    for (std::size_t v = 0; v < level_.size(); ++v) {
      for (std::size_t k = offsets_[v]; k < offsets_[v + 1]; ++k) {
        const std::size_t a = adjacency_[k];
        if (to_[a] == t && residual_[a] > eps_) {
          to_sink[v] = a;
          break;
        }
      }
    }
    double total = 0.0;
    for (std::size_t k = offsets_[s]; k < offsets_[s + 1]; ++k) {
      const std::size_t a = adjacency_[k];
      const auto v = static_cast<std::size_t>(to_[a]);
      const std::size_t b = to_sink[v];
      if (b == std::numeric_limits<std::size_t>::max() || residual_[a] <= eps_) continue;
      const double pushed = std::min(residual_[a], residual_[b]);
      residual_[a] -= pushed;
      residual_[a ^ 1U] += pushed;
      residual_[b] -= pushed;
      residual_[b ^ 1U] += pushed;
      total += pushed;
    }
    return total;
  }

  bool build_levels() {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<std::size_t>& queue = queue_;
    queue.clear();
    const auto s = static_cast<std::size_t>(net_->source());
    level_[s] = 0;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t v = queue[head];
      for (std::size_t k = offsets_[v]; k < offsets_[v + 1]; ++k) {
        const std::size_t a = adjacency_[k];
        const auto w = static_cast<std::size_t>(to_[a]);
        if (level_[w] < 0 && residual_[a] > eps_) {
          level_[w] = level_[v] + 1;
          queue.push_back(w);
        }
      }
    }
    return level_[static_cast<std::size_t>(net_->sink())] >= 0;
  }

  double augment(std::size_t v, double limit) {
    if (v == static_cast<std::size_t>(net_->sink())) return limit;
    for (std::size_t& k = cursor_[v]; k < offsets_[v + 1]; ++k) {
      const std::size_t a = adjacency_[k];
      const auto w = static_cast<std::size_t>(to_[a]);
      if (residual_[a] <= eps_ || level_[w] != level_[v] + 1) continue;
      const double pushed = augment(w, std::min(limit, residual_[a]));
      if (pushed > 0.0) {
        residual_[a] -= pushed;
        residual_[a ^ 1U] += pushed;
        return pushed;
      }
    }
    return 0.0;
  }

  const FlowNetwork* net_ = nullptr;
  double sentinel_ = 1.0;
  double eps_ = 0.0;
  std::vector<double> residual_;
  std::vector<Index> to_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> adjacency_;
  std::vector<Index> level_;
  std::vector<std::size_t> cursor_;
  std::vector<std::size_t> queue_;
};

MinCutSolver::MinCutSolver() : solver_(std::make_unique<Dinic>()) {}
MinCutSolver::~MinCutSolver() = default;
MinCutSolver::MinCutSolver(MinCutSolver&&) noexcept = default;
MinCutSolver& MinCutSolver::operator=(MinCutSolver&&) noexcept = default;

const MinCut& MinCutSolver::solve(const FlowNetwork& net) {
  Dinic& solver = *solver_;
  solver.load(net);
  MinCut& cut = cut_;
  cut.value = 0.0;
  cut.flow_value = solver.run();
  cut.sentinel = solver.sentinel();
  solver.reachable_from_source(cut.source_side);

  const auto m = static_cast<std::size_t>(net.num_arcs());
  cut.arc_flow.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    const auto ai = static_cast<Index>(a);
    const double cap = solver.substitute(net.capacity(ai));
    cut.arc_flow[a] = cap - solver.residual(2 * a);
    const bool tail_s = cut.in_source_side(net.tail(ai));
    const bool head_s = cut.in_source_side(net.head(ai));
    if (tail_s && !head_s) cut.value += cap;
    if (!tail_s && head_s) cut.value += solver.substitute(net.reverse_capacity(ai));
  }
  return cut;
}

MinCut min_cut(const FlowNetwork& net) {
  MinCutSolver solver;
  return solver.solve(net);
}

}  // namespace l0graph
