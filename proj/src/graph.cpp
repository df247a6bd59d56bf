#include "l0graph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

namespace l0graph {

Graph::Graph(Index num_vertices, std::vector<Edge> edges) : n_(num_vertices) {
  if (num_vertices < 1) {
    throw GraphError("graph needs at least one vertex");
  }
  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
      throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} references a vertex outside [0, " + std::to_string(n_) + ")");
    }
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw GraphError("duplicate edge {" + std::to_string(dup->u) + "," +
                     std::to_string(dup->v) + "}");
  }
  edges_ = std::move(edges);

  offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[static_cast<std::size_t>(e.u) + 1];
    ++offsets_[static_cast<std::size_t>(e.v) + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(2 * edges_.size());
  std::vector<Index> fill(offsets_.begin(), offsets_.end() - 1);
  for (Index k = 0; k < num_edges(); ++k) {
    const auto& e = edges_[static_cast<std::size_t>(k)];
    adjacency_[static_cast<std::size_t>(fill[static_cast<std::size_t>(e.u)]++)] = {e.v, k};
    adjacency_[static_cast<std::size_t>(fill[static_cast<std::size_t>(e.v)]++)] = {e.u, k};
  }
}

std::span<const Graph::Incidence> Graph::incident(Index v) const {
  const auto b = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v)]);
  const auto e = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v) + 1]);
  return {adjacency_.data() + b, e - b};
}

Index Graph::degree(Index v) const {
  return offsets_[static_cast<std::size_t>(v) + 1] - offsets_[static_cast<std::size_t>(v)];
}

std::vector<Index> Graph::component_labels() const {
  std::vector<Index> label(static_cast<std::size_t>(n_), -1);
  std::vector<Index> stack;
  Index next = 0;
  for (Index s = 0; s < n_; ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    label[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Index v = stack.back();
      stack.pop_back();
      for (const auto& inc : incident(v)) {
        auto& l = label[static_cast<std::size_t>(inc.neighbor)];
        if (l < 0) {
          l = next;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++next;
  }
  return label;
}

Index Graph::num_components() const {
  const auto labels = component_labels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

std::optional<std::vector<Index>> Graph::chain_order() const {
  if (num_edges() != n_ - 1 || !is_connected()) return std::nullopt;
  if (n_ == 1) return std::vector<Index>{0};
  Index start = -1;
  for (Index v = 0; v < n_; ++v) {
    if (degree(v) > 2) return std::nullopt;
    if (degree(v) == 1 && start < 0) start = v;
  }
  std::vector<Index> order;
  order.reserve(static_cast<std::size_t>(n_));
  Index prev = -1;
  Index cur = start;
  while (cur >= 0) {
    order.push_back(cur);
    Index next = -1;
    for (const auto& inc : incident(cur)) {
      if (inc.neighbor != prev) next = inc.neighbor;
    }
    prev = cur;
    cur = next;
  }
  return order;
}

std::optional<Index> Graph::find_edge(Index a, Index b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{a, b});
  if (it != edges_.end() && *it == Edge{a, b}) return it - edges_.begin();
  return std::nullopt;
}

Graph chain_graph(Index n) {
  std::vector<Edge> edges;
  for (Index i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(Index n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Index i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph complete_graph(Index n) {
  std::vector<Edge> edges;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph lattice_graph(Index rows, Index cols) {
  std::vector<Edge> edges;
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) {
      const Index v = r * cols + c;
      if (c + 1 < cols) edges.push_back({v, v + 1});
      if (r + 1 < rows) edges.push_back({v, v + cols});
    }
  }
  return Graph(rows * cols, std::move(edges));
}

Graph tadpole_graph(Index chain_length, Index clique_size) {
  std::vector<Edge> edges;
  for (Index i = 0; i + 1 < chain_length; ++i) edges.push_back({i, i + 1});
  const Index base = chain_length;
  if (chain_length > 0 && clique_size > 0) edges.push_back({chain_length - 1, base});
  for (Index i = 0; i < clique_size; ++i)
    for (Index j = i + 1; j < clique_size; ++j) edges.push_back({base + i, base + j});
  return Graph(chain_length + clique_size, std::move(edges));
}

EdgeWeighting::EdgeWeighting(Vector weights) : weights_(std::move(weights)) {
  for (Index e = 0; e < weights_.size(); ++e) {
    if (!std::isfinite(weights_[e]) || weights_[e] < 0.0) {
      throw DimensionError("edge weight " + std::to_string(e) + " is negative or non-finite");
    }
  }
}

EdgeWeighting EdgeWeighting::unit(const Graph& g) {
  return EdgeWeighting(Vector::Ones(g.num_edges()));
}

void require_aligned(const Graph& g, const EdgeWeighting& w) {
  if (w.size() != g.num_edges()) {
    throw DimensionError("edge weighting has " + std::to_string(w.size()) +
                         " entries, graph has " + std::to_string(g.num_edges()) + " edges");
  }
}

Grid::Grid(double spacing_, Label lo_, Label hi_, double origin_)
    : origin(origin_), spacing(spacing_), lo(lo_), hi(hi_) {
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw DimensionError("grid spacing must be positive and finite");
  }
  if (lo > hi) throw DimensionError("grid range is empty");
}

Grid Grid::covering(const Vector& y, double spacing, double origin) {
  if (y.size() == 0) throw DimensionError("cannot build a grid for an empty signal");
  if (!y.allFinite()) throw DimensionError("signal has non-finite entries");
  Grid g(spacing, 0, 0, origin);
  g.lo = g.nearest(y.minCoeff());
  g.hi = g.nearest(y.maxCoeff());
  return g;
}

Label Grid::nearest(double x) const {
  return static_cast<Label>(std::round((x - origin) / spacing));
}

LabeledSignal::LabeledSignal(std::vector<Label> labels, Grid grid)
    : labels_(std::move(labels)), grid_(grid) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!grid_.contains(labels_[i])) {
      throw DimensionError("label " + std::to_string(labels_[i]) + " at vertex " +
                           std::to_string(i) + " is outside the grid range");
    }
  }
}

LabeledSignal LabeledSignal::constant(Index n, Label label, const Grid& grid) {
  return LabeledSignal(std::vector<Label>(static_cast<std::size_t>(n), label), grid);
}

LabeledSignal LabeledSignal::rounded(const Vector& values, const Grid& grid) {
  std::vector<Label> labels(static_cast<std::size_t>(values.size()));
  for (Index i = 0; i < values.size(); ++i) {
    labels[static_cast<std::size_t>(i)] = grid.nearest(values[i]);
  }
  return LabeledSignal(std::move(labels), grid);
}

Vector LabeledSignal::values() const {
  Vector out(size());
  for (Index i = 0; i < size(); ++i) out[i] = value(i);
  return out;
}

Index LabeledSignal::num_distinct() const {
  std::vector<Label> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  return std::unique(sorted.begin(), sorted.end()) - sorted.begin();
}

bool LabeledSignal::is_constant() const {
  return std::adjacent_find(labels_.begin(), labels_.end(), std::not_equal_to<>()) ==
         labels_.end();
}

namespace {

template <typename Key>
Partition partition_by_key(const std::vector<Key>& keys, const Graph& g) {
  if (static_cast<Index>(keys.size()) != g.num_vertices()) {
    throw DimensionError("signal length does not match vertex count");
  }
  Partition p;
  p.block.resize(keys.size());
  std::unordered_map<Key, Index> ids;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto [it, inserted] = ids.try_emplace(keys[i], p.num_blocks);
    if (inserted) ++p.num_blocks;
    p.block[i] = it->second;
  }
  for (Index e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(e);
    if (p.block[static_cast<std::size_t>(ed.u)] != p.block[static_cast<std::size_t>(ed.v)]) {
      p.boundary.push_back(e);
    }
  }
  return p;
}

}  // namespace

Partition induced_partition(const LabeledSignal& sig, const Graph& g) {
  return partition_by_key(sig.labels(), g);
}

Partition induced_partition(const Vector& mu, const Graph& g) {
  // +0.0 and -0.0 hash differently; normalize so equal reals share a block.
  std::vector<double> keys(mu.data(), mu.data() + mu.size());
  for (auto& k : keys) k = k + 0.0;
  return partition_by_key(keys, g);
}

double cut_weight(const Partition& p, const EdgeWeighting& w) {
  double total = 0.0;
  for (Index e : p.boundary) total += w[e];
  return total;
}

}  // namespace l0graph
