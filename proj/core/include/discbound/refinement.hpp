#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "discbound/bound_interval.hpp"
#include "discbound/sample.hpp"

namespace discbound {

// ---------------------------------------------------------------------------
// Category merging
// ---------------------------------------------------------------------------

/// Inclusive, zero-based range of categories merged into one cluster.
struct ClusterSpan {
  std::size_t first = 0;
  std::size_t last = 0;

  [[nodiscard]] std::size_t size() const noexcept { return last - first + 1; }
  friend bool operator==(const ClusterSpan&, const ClusterSpan&) = default;
};

/// Partition of the categories into contiguous, nonempty clusters in order.
struct Clustering {
  std::vector<ClusterSpan> clusters;
  double max_range = 0.0;  // largest (max value - min value) over clusters

  [[nodiscard]] std::size_t cluster_count() const noexcept { return clusters.size(); }
};

enum class MergeDirection { upper, lower };

/// Splits strictly increasing values into h contiguous clusters minimizing
/// the largest cluster range.
///
/// Dynamic program over c[g][j], the best achievable maximum range when the
/// first j categories form g clusters:
///   c[1][j] = v_j - v_1
///   c[g][j] = min over g-1 <= i < j of max(c[g-1][i], v_j - v_{i+1})
/// Recovery walks back from (h, m) and, among optimal split points, takes the
/// smallest i, which keeps the trailing cluster as long as possible.
///
/// Throws DomainError unless 1 <= h <= m.
[[nodiscard]] Clustering merge_plan(std::span<const double> values, std::size_t h);

/// Collapses each cluster into one category: counts are summed and the value
/// is the cluster maximum (upper) or minimum (lower). Any mean bound computed
/// on the result is valid for the original sample in that direction.
[[nodiscard]] CategorizedSample apply_merge(const CategorizedSample& s, const Clustering& plan,
                                            MergeDirection direction);

/// Nest bounds on samples merged down to h categories. The upper end uses the
/// max-valued merge and the lower end the min-valued merge.
/// Requires 2 <= h <= m.
[[nodiscard]] BoundInterval merged_nest_bounds(const CategorizedSample& s, double delta,
                                               std::size_t h, Side side);

// ---------------------------------------------------------------------------
// Nearly uniform bounds
// ---------------------------------------------------------------------------

/// Increase of p.v when the `run` frequency bounds immediately preceding the
/// bound on the first `prefix` categories all fail, so that mass moves right:
///   sum_{b=1..run} p_{prefix-b} (v_prefix - v_{prefix-b})      (1-based).
/// Requires 0 <= run < prefix <= m. Returns 0 for run == 0.
[[nodiscard]] double nu_delta(std::size_t run, std::size_t prefix, std::span<const double> p,
                              std::span<const double> values);

struct NuCorrection {
  std::size_t allowed_failures = 0;
  /// table[i][j]: largest increase with exactly j failures among the bounds
  /// before the bound on the first i categories, none after it. Unreachable
  /// states hold -infinity. Dimensions (m + 1) x (allowed_failures + 1).
  std::vector<std::vector<double>> table;
  double correction = 0.0;  // table[m][allowed_failures]
};

/// Worst-case increase of the nest bound when up to `a` of the m - 1
/// frequency bounds fail, evaluated against the no-failure maximizer p.
///
///   c[i][0] = 0,   c[0][j > 0] = -inf
///   c[i][j] = max over 0 <= h <= min(j, i-1) of c[i-1-h][j-h] + nu_delta(h, i)
///
/// The diagonal c[i][i-1] reduces to nu_delta(i-1, i). Requires values
/// strictly increasing, p a probability vector, 0 <= a <= m - 2.
[[nodiscard]] NuCorrection nu_correction(std::span<const double> p,
                                         std::span<const double> values, std::size_t a);

/// Nest bounds that tolerate `a` failed frequency bounds: each bound gets
/// budget (a + 1) * delta / (m - 1) (delta halved per side when two-sided)
/// and the worst-case correction is added to the upper end and subtracted
/// from the lower end. a == 0 reproduces nest_bounds.
[[nodiscard]] BoundInterval nearly_uniform_nest_bounds(const CategorizedSample& s, double delta,
                                                       std::size_t a, Side side);

}  // namespace discbound
