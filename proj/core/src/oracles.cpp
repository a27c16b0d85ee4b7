#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "discbound/errors.hpp"
#include "discbound/summation.hpp"
#include "discbound/verify.hpp"

namespace discbound {

namespace {

// Exhaustive walk over integer compositions j_0 + ... + j_{m-1} = N.
class SimplexGrid {
 public:
  SimplexGrid(const GridConstraints& c, std::span<const double> values, std::int64_t steps)
      : c_(c), values_(values), steps_(steps), scale_(1.0 / static_cast<double>(steps)) {}

  double run() {
    descend(0, steps_, 0.0);
    if (!found_) throw InfeasibleError("grid search: no feasible grid point");
    return best_;
  }

 private:
  [[nodiscard]] bool in_interval(std::size_t i, std::int64_t j) const {
    if (c_.intervals.empty()) return true;
    const double x = static_cast<double>(j) * scale_;
    return x >= c_.intervals[i].lower && x <= c_.intervals[i].upper;
  }

  [[nodiscard]] bool meets_prefix(std::size_t i, std::int64_t prefix_units) const {
    if (c_.cumulative_lower.empty()) return true;
    return static_cast<double>(prefix_units) * scale_ >= c_.cumulative_lower[i];
  }

  void descend(std::size_t i, std::int64_t remaining, double partial) {
    const std::size_t m = values_.size();
    const std::int64_t used = steps_ - remaining;
    // Prune when even putting every remaining unit on the largest value
    // cannot beat the incumbent.
    const double top = std::max(values_[i], values_.back());
    if (found_ && partial + static_cast<double>(remaining) * scale_ * top < best_) return;
    if (i + 1 == m) {
      if (!in_interval(i, remaining)) return;
      consider(partial + static_cast<double>(remaining) * scale_ * values_[i]);
      return;
    }
    // Narrow the scan to the constrained window (one unit of slack each way);
    // the exact membership tests below still decide every point.
    std::int64_t from = 0;
    std::int64_t to = remaining;
    if (!c_.intervals.empty()) {
      from = std::max(from, units_floor(c_.intervals[i].lower) - 1);
      to = std::min(to, units_floor(c_.intervals[i].upper) + 1);
    }
    if (!c_.cumulative_lower.empty()) {
      from = std::max(from, units_floor(c_.cumulative_lower[i]) - used - 1);
    }
    for (std::int64_t j = from; j <= to; ++j) {
      if (!in_interval(i, j)) continue;
      if (!meets_prefix(i, used + j)) continue;
      descend(i + 1, remaining - j, partial + static_cast<double>(j) * scale_ * values_[i]);
    }
  }

  [[nodiscard]] std::int64_t units_floor(double x) const {
    return static_cast<std::int64_t>(std::floor(x * static_cast<double>(steps_)));
  }

  void consider(double v) {
    if (!found_ || v > best_) best_ = v;
    found_ = true;
  }

  const GridConstraints& c_;
  std::span<const double> values_;
  std::int64_t steps_;
  double scale_;
  double best_ = -std::numeric_limits<double>::infinity();
  bool found_ = false;
};

void merge_search(std::span<const double> values, std::size_t start, std::size_t clusters_left,
                  double worst, double& best) {
  const std::size_t m = values.size();
  if (clusters_left == 1) {
    best = std::min(best, std::max(worst, values[m - 1] - values[start]));
    return;
  }
  // The current cluster ends at `last`; leave room for the remaining clusters.
  for (std::size_t last = start; last + clusters_left <= m; ++last) {
    merge_search(values, last + 1, clusters_left - 1,
                 std::max(worst, values[last] - values[start]), best);
  }
}

}  // namespace

double brute_force_max_mean(const GridConstraints& constraints, std::span<const double> values,
                            double resolution) {
  const std::size_t m = values.size();
  if (m < 1 || m > 4) throw DomainError("grid search: supports 1 <= m <= 4");
  if (!(resolution >= 1e-3 * (1.0 - 1e-12)) || !(resolution <= 1.0)) {
    throw DomainError("grid search: resolution must lie in [1e-3, 1]");
  }
  if (!constraints.intervals.empty() && constraints.intervals.size() != m) {
    throw ValidationError("grid search: need one interval per category");
  }
  if (!constraints.cumulative_lower.empty() && constraints.cumulative_lower.size() + 1 != m) {
    throw ValidationError("grid search: need m - 1 cumulative lower bounds");
  }
  const auto steps = static_cast<std::int64_t>(std::llround(1.0 / resolution));
  return SimplexGrid(constraints, values, steps).run();
}

double brute_force_merge(std::span<const double> values, std::size_t h) {
  const std::size_t m = values.size();
  if (m < 1 || m > 12) throw DomainError("merge enumeration: supports 1 <= m <= 12");
  if (h < 1 || h > m) throw DomainError("merge enumeration: h out of range");
  double best = std::numeric_limits<double>::infinity();
  merge_search(values, 0, h, 0.0, best);
  return best;
}

double brute_force_nu_correction(std::span<const double> p, std::span<const double> values,
                                 std::size_t a) {
  const std::size_t m = p.size();
  if (m != values.size() || m < 2 || m > 16) {
    throw DomainError("failure enumeration: supports 2 <= m <= 16");
  }
  // Prefix masses are the thresholds that p meets with equality.
  std::vector<double> t(m + 1, 0.0);
  CompensatedSum prefix;
  for (std::size_t i = 1; i < m; ++i) {
    prefix += p[i - 1];
    t[i] = prefix.value();
  }
  t[m] = 1.0;

  auto maximized = [&](std::uint32_t failed) {
    // Bound i (1 <= i < m) is dropped when bit i-1 is set. The greedy
    // maximizer keeps each prefix at the last surviving threshold.
    std::vector<double> q(m);
    double prev_level = 0.0;
    double level = 0.0;
    for (std::size_t i = 1; i <= m; ++i) {
      const bool dropped = i < m && (failed >> (i - 1)) & 1u;
      if (!dropped) level = t[i];
      q[i - 1] = level - prev_level;
      prev_level = level;
    }
    return compensated_dot(q, values);
  };

  const double base = maximized(0);
  double best = 0.0;
  const std::uint32_t subsets = 1u << (m - 1);
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > a) continue;
    best = std::max(best, maximized(mask) - base);
  }
  return best;
}

}  // namespace discbound
