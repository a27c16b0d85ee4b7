#pragma once

#include <span>
#include <vector>

#include "discbound/bound_interval.hpp"
#include "discbound/sample.hpp"

namespace discbound {

struct ProbabilityInterval {
  double lower = 0.0;
  double upper = 1.0;
};

/// Per-category binomial inversion intervals at budget delta / (2m) each.
///
/// Jointly, by the union bound, they contain p* with probability at least
/// 1 - delta; the same box serves upper, lower and two-sided bounds.
[[nodiscard]] std::vector<ProbabilityInterval> box_intervals(const CategorizedSample& s,
                                                             double delta);

struct BoxSolution {
  std::vector<double> p;
  double bound = 0.0;
};

/// Maximizes p.v over the box intersected with the simplex.
///
/// Starts every p_i at its lower end and pours the remaining headroom into
/// categories from the last back to the first, each up to its upper end.
/// Values must be strictly increasing. Throws InfeasibleError when the box
/// misses the simplex (sum of lowers > 1 or sum of uppers < 1).
[[nodiscard]] BoxSolution box_maximize(std::span<const ProbabilityInterval> intervals,
                                       std::span<const double> values);

/// Mean bounds from the Bonferroni box. Every side uses the full box at
/// per-category budget delta / (2m); no extra split is needed for two-sided.
[[nodiscard]] BoundInterval box_bounds(const CategorizedSample& s, double delta, Side side);

}  // namespace discbound
