#include "l0graph/chain_exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace l0graph {

Vector Segmentation::fitted() const {
  Vector out(length);
  Index start = 0;
  for (std::size_t s = 0; s < means.size(); ++s) {
    const Index stop = s < breakpoints.size() ? breakpoints[s] : length;
    out.segment(start, stop - start).setConstant(means[s]);
    start = stop;
  }
  return out;
}

namespace {

constexpr double kTieTolerance = 1e-12;

bool nearly_equal(double a, double b) {
  return std::abs(a - b) <= kTieTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

// Neumaier-compensated running sums.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// Means and cost of a segmentation evaluated directly from the data.
Segmentation finish(const Vector& y, double lambda, std::vector<Index> breakpoints) {
  Segmentation seg;
  seg.length = y.size();
  seg.breakpoints = std::move(breakpoints);
  double sse = 0.0;
  Index start = 0;
  for (std::size_t s = 0; s <= seg.breakpoints.size(); ++s) {
    const Index stop = s < seg.breakpoints.size() ? seg.breakpoints[s] : y.size();
    const auto piece = y.segment(start, stop - start);
    const double mean = piece.mean();
    seg.means.push_back(mean);
    sse += (piece.array() - mean).square().sum();
    start = stop;
  }
  seg.cost = 0.5 * sse + lambda * static_cast<double>(seg.breakpoints.size());
  return seg;
}

void require_input(const Vector& y, double lambda) {
  if (y.size() == 0) throw DimensionError("chain data is empty");
  if (!y.allFinite()) throw DimensionError("chain data has non-finite entries");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw DimensionError("lambda must be finite and nonnegative");
  }
}

}  // namespace

Segmentation exact_l0_chain(const Vector& y, double lambda, bool prune) {
  require_input(y, lambda);
  const Index n = y.size();
  const double center = y.mean();

  std::vector<double> s1(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> s2(static_cast<std::size_t>(n) + 1, 0.0);
  CompensatedSum acc1;
  CompensatedSum acc2;
  for (Index i = 0; i < n; ++i) {
    const double z = y[i] - center;
    acc1.add(z);
    acc2.add(z * z);
    s1[static_cast<std::size_t>(i) + 1] = acc1.value();
    s2[static_cast<std::size_t>(i) + 1] = acc2.value();
  }
  auto segment_cost = [&](Index i, Index j) {
    const auto a = static_cast<std::size_t>(i);
    const auto b = static_cast<std::size_t>(j);
    const double s = s1[b] - s1[a];
    const double q = s2[b] - s2[a];
    return 0.5 * std::max(0.0, q - s * s / static_cast<double>(j - i));
  };

  // best[j]: optimal cost of y[0, j); parent[j]: start of its last segment.
  std::vector<double> best(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<Index> parent(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Index> segments(static_cast<std::size_t>(n) + 1, 0);

  auto breakpoints_of = [&](Index j) {
    std::vector<Index> bps;
    while (j > 0) {
      const Index i = parent[static_cast<std::size_t>(j)];
      if (i > 0) bps.push_back(i);
      j = i;
    }
    std::reverse(bps.begin(), bps.end());
    return bps;
  };
  auto entry_cost = [&](Index i) {
    return best[static_cast<std::size_t>(i)] + (i > 0 ? lambda : 0.0);
  };

  std::vector<Index> candidates{0};
  for (Index j = 1; j <= n; ++j) {
    double chosen_cost = std::numeric_limits<double>::infinity();
    Index chosen = -1;
    for (Index i : candidates) {
      const double value = entry_cost(i) + segment_cost(i, j);
      if (chosen < 0 || (value < chosen_cost && !nearly_equal(value, chosen_cost))) {
        chosen_cost = value;
        chosen = i;
        continue;
      }
      if (!nearly_equal(value, chosen_cost)) continue;
      const Index seg_i = segments[static_cast<std::size_t>(i)] + 1;
      const Index seg_c = segments[static_cast<std::size_t>(chosen)] + 1;
      bool better = seg_i < seg_c;
      if (seg_i == seg_c) {
        auto bi = breakpoints_of(i);
        auto bc = breakpoints_of(chosen);
        if (i > 0) bi.push_back(i);
        if (chosen > 0) bc.push_back(chosen);
        better = bi < bc;
      }
      if (better) {
        chosen_cost = value;
        chosen = i;
      }
    }
    const auto ju = static_cast<std::size_t>(j);
    best[ju] = chosen_cost;
    parent[ju] = chosen;
    segments[ju] = segments[static_cast<std::size_t>(chosen)] + 1;

    if (prune) {
      const double bound = best[ju] + lambda;
      std::erase_if(candidates, [&](Index i) {
        const double value = entry_cost(i) + segment_cost(i, j);
        return value > bound && !nearly_equal(value, bound);
      });
    }
    candidates.push_back(j);
  }
  return finish(y, lambda, breakpoints_of(n));
}

Segmentation brute_force_chain(const Vector& y, double lambda) {
  require_input(y, lambda);
  const Index n = y.size();
  if (n > 16) {
    throw SizeGuardError("brute-force chain search supports at most 16 points, got " +
                         std::to_string(n));
  }
  const std::uint32_t sets = 1U << static_cast<unsigned>(n - 1);
  Segmentation best;
  bool have = false;
  for (std::uint32_t mask = 0; mask < sets; ++mask) {
    std::vector<Index> bps;
    for (Index b = 0; b + 1 < n; ++b) {
      if ((mask >> b) & 1U) bps.push_back(b + 1);
    }
    Segmentation seg = finish(y, lambda, std::move(bps));
    bool take = !have;
    if (have) {
      if (!nearly_equal(seg.cost, best.cost)) {
        take = seg.cost < best.cost;
      } else if (seg.num_segments() != best.num_segments()) {
        take = seg.num_segments() < best.num_segments();
      } else {
        take = seg.breakpoints < best.breakpoints;
      }
    }
    if (take) {
      best = std::move(seg);
      have = true;
    }
  }
  return best;
}

}  // namespace l0graph
