#include "l0graph/tv_chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace l0graph {

Index TvSolution::interval_end(Index a) const {
  return a + 1 < num_intervals() ? starts[static_cast<std::size_t>(a) + 1] : mu.size();
}

TvSolution describe_tv_solution(Vector mu, double lambda) {
  if (mu.size() == 0) throw DimensionError("fit is empty");
  TvSolution sol;
  sol.lambda = lambda;
  sol.mu = std::move(mu);
  sol.starts.push_back(0);
  for (Index i = 1; i < sol.mu.size(); ++i) {
    if (sol.mu[i] != sol.mu[i - 1]) sol.starts.push_back(i);
  }
  for (Index a = 0; a + 1 < sol.num_intervals(); ++a) {
    const Index next = sol.starts[static_cast<std::size_t>(a) + 1];
    sol.signs.push_back(sol.mu[next] > sol.mu[next - 1] ? 1 : -1);
  }
  const Index k = sol.num_intervals();
  for (Index a = 0; a < k; ++a) {
    const int right = a + 1 < k ? sol.signs[static_cast<std::size_t>(a)] : 0;
    const int left = a > 0 ? sol.signs[static_cast<std::size_t>(a) - 1] : 0;
    const auto len = static_cast<double>(sol.interval_end(a) - sol.starts[static_cast<std::size_t>(a)]);
    sol.shifts.push_back(lambda * static_cast<double>(right - left) / len);
  }
  return sol;
}

namespace {

struct TautStringFit {
  Vector x;
  Index runs = 0;
};

// Direct 1-D TV scheme: sweeps left to right maintaining bounds [vmin, vmax]
// on the current segment value and the dual variable range [umax, umin];
// emits a segment whenever the dual leaves [-lambda, lambda].
TautStringFit taut_string(const Vector& y, double lambda) {
  const Index n = y.size();
  TautStringFit fit;
  fit.x.resize(n);
  Vector& x = fit.x;
  Index k = 0;
  Index k0 = 0;
  Index kplus = 0;
  Index kminus = 0;
  double umin = lambda;
  double umax = -lambda;
  double vmin = y[0] - lambda;
  double vmax = y[0] + lambda;
  const double two_lambda = 2.0 * lambda;

  auto emit = [&](double value, Index last) {
    ++fit.runs;
    do {
      x[k0++] = value;
    } while (k0 <= last);
  };

  for (;;) {
    while (k == n - 1) {
      if (umin < 0.0) {
        emit(vmin, kminus);
        k = kminus = k0;
        vmin = y[k];
        umin = lambda;
        umax = vmin + umin - vmax;
      } else if (umax > 0.0) {
        emit(vmax, kplus);
        k = kplus = k0;
        vmax = y[k];
        umax = -lambda;
        umin = vmax + umax - vmin;
      } else {
        vmin += umin / static_cast<double>(k - k0 + 1);
        emit(vmin, k);
        return fit;
      }
    }
    umin += y[k + 1] - vmin;
    if (umin < -lambda) {
      emit(vmin, kminus);
      k = kminus = kplus = k0;
      vmin = y[k];
      vmax = vmin + two_lambda;
      umin = lambda;
      umax = -lambda;
      continue;
    }
    umax += y[k + 1] - vmax;
    if (umax > lambda) {
      emit(vmax, kplus);
      k = kminus = kplus = k0;
      vmax = y[k];
      vmin = vmax - two_lambda;
      umin = lambda;
      umax = -lambda;
      continue;
    }
    ++k;
    if (umin >= lambda) {
      kminus = k;
      vmin += (umin - lambda) / static_cast<double>(kminus - k0 + 1);
      umin = lambda;
    }
    if (umax <= -lambda) {
      kplus = k;
      vmax += (umax + lambda) / static_cast<double>(kplus - k0 + 1);
      umax = -lambda;
    }
  }
}

void require_input(const Vector& y, double lambda) {
  if (y.size() == 0) throw DimensionError("chain data is empty");
  if (!y.allFinite()) throw DimensionError("chain data has non-finite entries");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw DimensionError("lambda must be finite and nonnegative");
  }
}

}  // namespace

TvSolution tv_chain(const Vector& y, double lambda) {
  require_input(y, lambda);
  if (lambda == 0.0 || y.size() == 1) return describe_tv_solution(y, lambda);

  TautStringFit fit = taut_string(y, lambda);
  TvSolution sol = describe_tv_solution(std::move(fit.x), lambda);
  sol.merged_ties = fit.runs != sol.num_intervals();
  return sol;
}

KktReport kkt_check(const TvSolution& sol, const Vector& y, double lambda) {
  KktReport report;
  report.knife_edge = sol.merged_ties;
  const Index n = y.size();
  if (sol.mu.size() != n) {
    report.failure = "fit length does not match data";
    return report;
  }
  const Index k = sol.num_intervals();
  if (k == 0 || sol.starts.front() != 0 || static_cast<Index>(sol.signs.size()) != k - 1 ||
      static_cast<Index>(sol.shifts.size()) != k) {
    report.failure = "malformed interval structure";
    return report;
  }
  for (Index a = 0; a < k; ++a) {
    if (sol.interval_end(a) <= sol.starts[static_cast<std::size_t>(a)]) {
      throw DimensionError("interval " + std::to_string(a) + " has zero length");
    }
  }

  const double scale = std::max(1.0, y.cwiseAbs().maxCoeff());
  const double fit_tol = 1e-9 * scale;

  // Candidate fit: interval means of y plus the level shifts.
  Vector candidate(n);
  for (Index a = 0; a < k; ++a) {
    const Index b = sol.starts[static_cast<std::size_t>(a)];
    const Index e = sol.interval_end(a);
    const double level = y.segment(b, e - b).mean() + sol.shifts[static_cast<std::size_t>(a)];
    candidate.segment(b, e - b).setConstant(level);
  }
  report.fit_gap = (candidate - sol.mu).cwiseAbs().maxCoeff();
  if (report.fit_gap > fit_tol) {
    report.failure = "fit differs from projected data plus level shifts";
    return report;
  }

  if (lambda == 0.0) {
    report.ok = (sol.mu - y).cwiseAbs().maxCoeff() <= fit_tol;
    if (!report.ok) report.failure = "lambda is zero but the fit differs from the data";
    return report;
  }

  for (Index a = 0; a + 1 < k; ++a) {
    const Index next = sol.starts[static_cast<std::size_t>(a) + 1];
    const double jump = candidate[next] - candidate[next - 1];
    if (!(static_cast<double>(sol.signs[static_cast<std::size_t>(a)]) * jump > 0.0)) {
      report.failure = "jump " + std::to_string(a) + " does not have its stated sign";
      return report;
    }
  }

  // y - mu = lambda D^T w with (D^T w)_i = w_{i-1} - w_i, so w_j = -prefix_j / lambda.
  const double dual_tol =
      1e-9 + 64.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon() * scale / lambda;
  double prefix = 0.0;
  std::size_t next_boundary = 1;
  for (Index j = 0; j < n; ++j) {
    prefix += y[j] - candidate[j];
    if (j == n - 1) break;
    const double w = -prefix / lambda;
    const bool at_boundary =
        next_boundary < sol.starts.size() && sol.starts[next_boundary] == j + 1;
    if (at_boundary) {
      const double gap = std::abs(w - sol.signs[next_boundary - 1]);
      report.boundary_gap = std::max(report.boundary_gap, gap);
      ++next_boundary;
    } else {
      report.max_interior_dual = std::max(report.max_interior_dual, std::abs(w));
    }
  }
  report.closing_gap = std::abs(prefix) / lambda;
  if (report.max_interior_dual >= 1.0 - dual_tol) report.knife_edge = true;

  if (report.boundary_gap > dual_tol) {
    report.failure = "boundary dual entries differ from the jump signs";
  } else if (report.max_interior_dual > 1.0 + dual_tol) {
    report.failure = "interior dual entry outside [-1, 1]";
  } else if (report.closing_gap > dual_tol) {
    report.failure = "residual does not sum to zero";
  } else {
    report.ok = true;
  }
  return report;
}

bool kkt_certificate(const TvSolution& sol, const Vector& y, double lambda) {
  return kkt_check(sol, y, lambda).ok;
}

double tv_lambda_max(const Vector& y) {
  if (y.size() == 0) throw DimensionError("chain data is empty");
  const double mean = y.mean();
  double prefix = 0.0;
  double best = 0.0;
  for (Index j = 0; j + 1 < y.size(); ++j) {
    prefix += y[j] - mean;
    best = std::max(best, std::abs(prefix));
  }
  return best;
}

Vector tv_debiased(const TvSolution& sol, const Vector& y) {
  if (y.size() != sol.mu.size()) throw DimensionError("data length does not match fit");
  Vector out(y.size());
  for (Index a = 0; a < sol.num_intervals(); ++a) {
    const Index b = sol.starts[static_cast<std::size_t>(a)];
    const Index e = sol.interval_end(a);
    out.segment(b, e - b).setConstant(y.segment(b, e - b).mean());
  }
  return out;
}

Vector tv_relaxed(const Vector& y, double lambda, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DimensionError("mixing weight must lie in [0, 1]");
  const TvSolution sol = tv_chain(y, lambda);
  return alpha * sol.mu + (1.0 - alpha) * tv_debiased(sol, y);
}

}  // namespace l0graph
