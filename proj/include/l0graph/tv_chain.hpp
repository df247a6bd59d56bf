#pragma once

#include <string>
#include <vector>

#include "l0graph/graph.hpp"

namespace l0graph {

/// Fused-lasso fit on a chain with its interval structure.
///
/// Intervals are maximal runs of exactly equal values; runs that the solver
/// emitted separately but with identical values are merged and flagged.
struct TvSolution {
  Vector mu;
  double lambda = 0.0;
  /// Start index of every interval; starts.front() == 0.
  std::vector<Index> starts;
  /// Sign of the jump from interval a to a + 1 (size k - 1).
  std::vector<int> signs;
  /// lambda (s_a - s_{a-1}) / |S_a| with s_0 = s_k = 0 (size k).
  std::vector<double> shifts;
  bool merged_ties = false;

  Index num_intervals() const { return static_cast<Index>(starts.size()); }
  Index interval_end(Index a) const;
};

/// Derives intervals, jump signs and level shifts from a fitted vector.
TvSolution describe_tv_solution(Vector mu, double lambda);

/// Exact minimizer of 0.5 ||y - mu||^2 + lambda sum |mu_{i+1} - mu_i| by the
/// direct taut-string scheme (linear time in practice).
TvSolution tv_chain(const Vector& y, double lambda);

struct KktReport {
  bool ok = false;
  /// True when the structure sits on a merge boundary (merged tie, or an
  /// interior dual value at +-1 within tolerance).
  bool knife_edge = false;
  double fit_gap = 0.0;
  double max_interior_dual = 0.0;
  double boundary_gap = 0.0;
  double closing_gap = 0.0;
  std::string failure;
};

/// Subgradient certificate for the interval structure of `sol`: the
/// projected data plus level shifts must reproduce `sol.mu` with the stated
/// jump signs, and the dual vector recovered from prefix sums of the residual
/// must lie in [-1, 1] with boundary entries equal to the jump signs.
KktReport kkt_check(const TvSolution& sol, const Vector& y, double lambda);
bool kkt_certificate(const TvSolution& sol, const Vector& y, double lambda);

/// max_j |sum_{i <= j} (y_i - mean(y))|: the smallest lambda with a constant fit.
double tv_lambda_max(const Vector& y);

/// Each interval of `sol` replaced by the mean of y over it.
Vector tv_debiased(const TvSolution& sol, const Vector& y);

/// alpha * tv + (1 - alpha) * debiased tv.
Vector tv_relaxed(const Vector& y, double lambda, double alpha);

}  // namespace l0graph
