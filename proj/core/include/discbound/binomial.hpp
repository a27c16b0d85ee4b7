#pragma once

#include <cstdint>

namespace discbound {

/// Number of bisection halvings used by the inversions. The search stops
/// earlier once the bracket collapses to adjacent doubles.
inline constexpr int kBisectionSteps = 80;

/// Trial count, observed successes and failure budget for one binomial inversion.
struct InversionQuery {
  std::int64_t n = 1;
  std::int64_t k = 0;
  double delta = 0.05;

  /// Throws ValidationError unless n >= 1, 0 <= k <= n and 0 < delta < 1.
  void validate() const;
};

/// Left tail P[X <= k] for X ~ Binomial(n, p).
///
/// Any integer k is accepted: the tail is 0 for k < 0 and 1 for k >= n.
/// Throws DomainError for n < 1 or p outside [0, 1].
[[nodiscard]] double binom_cdf(std::int64_t n, std::int64_t k, double p);

/// Right tail P[X > k] = 1 - binom_cdf(n, k, p), evaluated directly so that
/// small upper tails keep full relative accuracy.
[[nodiscard]] double binom_sf(std::int64_t n, std::int64_t k, double p);

/// Largest p with binom_cdf(n, k, p) >= delta.
///
/// Equals 1 when k == n. The final bisection bracket is resolved toward 1,
/// so the returned value never undercuts the exact root.
[[nodiscard]] double invert_upper(const InversionQuery& q);

/// Smallest p with P[X >= k] >= delta, i.e. 1 - binom_cdf(n, k - 1, p) >= delta.
///
/// Equals 0 when k == 0. The final bracket is resolved toward 0.
[[nodiscard]] double invert_lower(const InversionQuery& q);

}  // namespace discbound
