#include <algorithm>
#include <limits>
#include <string>

#include "discbound/errors.hpp"
#include "discbound/nest.hpp"
#include "discbound/refinement.hpp"

namespace discbound {

Clustering merge_plan(std::span<const double> values, std::size_t h) {
  const std::size_t m = values.size();
  if (m == 0) throw DomainError("merge: no categories");
  if (h < 1 || h > m) {
    throw DomainError("merge: cluster count must lie in [1, " + std::to_string(m) + "], got " +
                      std::to_string(h));
  }
  for (std::size_t i = 1; i < m; ++i) {
    if (!(values[i - 1] < values[i])) {
      throw ValidationError("merge: values must be strictly increasing");
    }
  }

  constexpr double kInf = std::numeric_limits<double>::infinity();
  // cost[g][j]: first j categories in g clusters.
  std::vector<std::vector<double>> cost(h + 1, std::vector<double>(m + 1, kInf));
  for (std::size_t j = 1; j <= m; ++j) cost[1][j] = values[j - 1] - values[0];
  for (std::size_t g = 2; g <= h; ++g) {
    for (std::size_t j = g; j <= m; ++j) {
      double best = kInf;
      for (std::size_t i = g - 1; i < j; ++i) {
        best = std::min(best, std::max(cost[g - 1][i], values[j - 1] - values[i]));
      }
      cost[g][j] = best;
    }
  }

  Clustering plan;
  plan.max_range = cost[h][m];
  std::size_t end = m;
  for (std::size_t g = h; g >= 2; --g) {
    std::size_t split = g - 1;
    for (; split < end; ++split) {
      if (std::max(cost[g - 1][split], values[end - 1] - values[split]) == cost[g][end]) break;
    }
    plan.clusters.push_back({split, end - 1});
    end = split;
  }
  plan.clusters.push_back({0, end - 1});
  std::reverse(plan.clusters.begin(), plan.clusters.end());
  return plan;
}

CategorizedSample apply_merge(const CategorizedSample& s, const Clustering& plan,
                              MergeDirection direction) {
  std::size_t expected_first = 0;
  for (const auto& c : plan.clusters) {
    if (c.first != expected_first || c.last < c.first || c.last >= s.size()) {
      throw ValidationError("merge: clustering does not partition the categories in order");
    }
    expected_first = c.last + 1;
  }
  if (expected_first != s.size()) {
    throw ValidationError("merge: clustering does not cover every category");
  }

  std::vector<std::int64_t> counts;
  std::vector<double> values;
  counts.reserve(plan.clusters.size());
  values.reserve(plan.clusters.size());
  for (const auto& c : plan.clusters) {
    std::int64_t total = 0;
    for (std::size_t i = c.first; i <= c.last; ++i) total += s.counts()[i];
    counts.push_back(total);
    values.push_back(direction == MergeDirection::upper ? s.values()[c.last]
                                                        : s.values()[c.first]);
  }
  return CategorizedSample(std::move(counts), std::move(values));
}

BoundInterval merged_nest_bounds(const CategorizedSample& s, double delta, std::size_t h,
                                 Side side) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ValidationError("delta must lie in (0, 1), got " + std::to_string(delta));
  }
  if (h < 2 || h > s.size()) {
    throw DomainError("merged nest: cluster count must lie in [2, " + std::to_string(s.size()) +
                      "], got " + std::to_string(h));
  }
  const Clustering plan = merge_plan(s.values(), h);
  const double side_delta = side == Side::two_sided ? delta / 2.0 : delta;
  const double per_bound = side_delta / static_cast<double>(h - 1);

  BoundInterval out{
      .lower = s.min_value(),
      .upper = s.max_value(),
      .delta = delta,
      .method = Method::merged_nest,
      .side = side,
  };
  if (side != Side::lower) {
    out.upper = std::min(nest_upper(apply_merge(s, plan, MergeDirection::upper), per_bound),
                         s.max_value());
  }
  if (side != Side::upper) {
    out.lower = std::max(nest_lower(apply_merge(s, plan, MergeDirection::lower), per_bound),
                         s.min_value());
  }
  return out;
}

}  // namespace discbound
