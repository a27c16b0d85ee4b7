#pragma once

#include <cstdint>

#include "discbound/bound_interval.hpp"
#include "discbound/sample.hpp"

namespace discbound {

/// Hoeffding half-width r * sqrt(ln(2/delta) / (2n)) for simultaneous bounds.
[[nodiscard]] double hoeffding_epsilon(double range, std::int64_t n, double delta);

/// Maurer-Pontil empirical Bernstein half-width
/// sqrt(2 var ln(4/delta) / n) + 7 r ln(4/delta) / (3 (n - 1)).
[[nodiscard]] double maurer_pontil_epsilon(double variance, double range, std::int64_t n,
                                           double delta);

/// Two-sided interval mean +/- eps_H, clamped to the value range.
[[nodiscard]] BoundInterval hoeffding_bounds(const CategorizedSample& s, double delta);

/// Two-sided interval mean +/- eps_MP, clamped to the value range.
/// Throws DomainError for fewer than two observations.
[[nodiscard]] BoundInterval maurer_pontil_bounds(const CategorizedSample& s, double delta);

}  // namespace discbound
