#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "l0graph/graph.hpp"

namespace l0graph {

struct EdgeList {
  Graph graph;
  /// Present when every edge line carried a third column.
  std::optional<EdgeWeighting> weights;
};

/// Parses "u v" or "u v w" lines (0-based ids). Blank lines and '#'
/// comments are skipped; a "# vertices: N" comment fixes the vertex count,
/// otherwise it is one past the largest id. Errors carry line numbers.
EdgeList read_edge_list(std::istream& in);
EdgeList read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g, const EdgeWeighting* weights = nullptr,
                     const std::vector<std::string>& comments = {});

/// One real per line (line order = vertex id) or "vertex,value" rows, with
/// an optional "vertex,value" header. Values must be finite and cover every
/// vertex exactly once.
Vector read_signal(std::istream& in);
Vector read_signal_file(const std::string& path);

void write_signal(std::ostream& out, const Vector& values,
                  const std::vector<std::string>& comments = {});
void write_signal_file(const std::string& path, const Vector& values,
                       const std::vector<std::string>& comments = {});

/// Shortest decimal form that parses back to the same double.
std::string format_real(double x);

}  // namespace l0graph
