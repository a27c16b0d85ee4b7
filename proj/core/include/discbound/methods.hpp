#pragma once

#include <cstddef>
#include <string>

#include "discbound/bound_interval.hpp"
#include "discbound/sample.hpp"

namespace discbound {

/// Selects one bound method together with its refinement parameter.
struct MethodConfig {
  Method method = Method::nest;
  Side side = Side::two_sided;
  /// Cluster count h for merged_nest. Zero means "half the categories,
  /// rounded down, but at least two".
  std::size_t merged_categories = 0;
  /// Allowed frequency-bound failures a for nearly_uniform.
  std::size_t allowed_failures = 0;

  /// Throws ValidationError for parameters that cannot apply to any sample.
  void validate() const;
  /// Short human-readable tag such as "nest/two" or "merged-nest(h=5)/upper".
  [[nodiscard]] std::string describe() const;
};

/// Dispatches to the configured method. Hoeffding and Maurer-Pontil are
/// always computed as simultaneous two-sided intervals; for a one-sided side
/// the open end is replaced by the support endpoint.
[[nodiscard]] BoundInterval compute_bound(const MethodConfig& config, const CategorizedSample& s,
                                          double delta);

}  // namespace discbound
