#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "discbound/bound_interval.hpp"
#include "discbound/sample.hpp"

namespace discbound {

/// Nested cumulative lower bounds and the probability vector they induce.
///
/// thresholds has m + 1 entries with t_0 = 0, t_m = 1 and t nondecreasing;
/// t_i lower-bounds p*_1 + ... + p*_i. maximizer[i] = t_{i+1} - t_i.
struct NestState {
  std::vector<double> thresholds;
  std::vector<double> maximizer;
};

/// t_i = invert_lower(n, k_1 + ... + k_i, per_bound_delta) for 0 < i < m.
///
/// A running maximum is applied so the sequence is nondecreasing even under
/// rounding; t_{i-1} is itself a valid lower bound on the i-th prefix mass.
[[nodiscard]] std::vector<double> nest_thresholds(std::span<const std::int64_t> counts,
                                                  double per_bound_delta);

struct NestSolution {
  NestState state;
  double bound = 0.0;
};

/// Assigns p_i = t_i - t_{i-1} and returns p.v.
///
/// With ascending values this maximizes p.v over the nest; feeding counts
/// and values in reverse order yields the minimizer instead.
[[nodiscard]] NestSolution nest_eval(std::span<const std::int64_t> counts,
                                     std::span<const double> values, double per_bound_delta);

/// Upper end alone, at the given budget for each of the m - 1 frequency bounds.
[[nodiscard]] double nest_upper(const CategorizedSample& s, double per_bound_delta);
/// Lower end alone, via the reversed-order nest.
[[nodiscard]] double nest_lower(const CategorizedSample& s, double per_bound_delta);

/// One-sided bounds spend delta / (m - 1) per frequency bound; two-sided
/// bounds spend (delta / 2) / (m - 1) per bound on each side.
[[nodiscard]] BoundInterval nest_bounds(const CategorizedSample& s, double delta, Side side);

}  // namespace discbound
