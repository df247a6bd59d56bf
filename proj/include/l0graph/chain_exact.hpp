#pragma once

#include <vector>

#include "l0graph/graph.hpp"

namespace l0graph {

/// Piecewise-constant fit on a chain. `breakpoints` holds the start index of
/// every segment after the first, ascending.
struct Segmentation {
  std::vector<Index> breakpoints;
  std::vector<double> means;
  double cost = 0.0;
  Index length = 0;

  Index num_segments() const { return static_cast<Index>(means.size()); }
  Vector fitted() const;
};

/// Global minimizer of 0.5 sum (y_i - mu_i)^2 + lambda #{i : mu_i != mu_{i+1}}
/// by quadratic-time dynamic programming over the last segment start. Among
/// optimal segmentations the one with fewest segments, then lexicographically
/// smallest breakpoints, is returned. `prune` enables PELT candidate pruning,
/// which never changes the result.
Segmentation exact_l0_chain(const Vector& y, double lambda, bool prune = false);

/// Reference minimizer by enumerating all 2^(n-1) breakpoint sets; n <= 16.
Segmentation brute_force_chain(const Vector& y, double lambda);

}  // namespace l0graph
