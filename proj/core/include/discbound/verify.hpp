#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "discbound/box.hpp"
#include "discbound/methods.hpp"

namespace discbound {

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

/// Generating distribution p* over strictly increasing category values.
class TrueDistribution {
 public:
  /// Throws ValidationError unless p is nonnegative, |sum p - 1| <= 1e-12,
  /// and values are finite, strictly increasing and as long as p.
  TrueDistribution(std::vector<double> probabilities, std::vector<double> values);

  /// Equal probability 1/m on each value.
  static TrueDistribution uniform(std::vector<double> values);

  [[nodiscard]] const std::vector<double>& probabilities() const noexcept { return p_; }
  [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }
  [[nodiscard]] std::size_t size() const noexcept { return p_.size(); }
  [[nodiscard]] double true_mean() const noexcept { return mean_; }

 private:
  std::vector<double> p_;
  std::vector<double> values_;
  double mean_ = 0.0;
};

/// Random stream for one Monte Carlo trial. The engine state depends only on
/// (seed, trial), so trials can run in any order or on any thread.
[[nodiscard]] std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t trial);

/// Draws counts ~ Multinomial(n, p*) by sequential binomial decomposition:
/// category i receives Binomial(remaining, p_i / remaining mass).
[[nodiscard]] std::vector<std::int64_t> sample_multinomial(std::int64_t n,
                                                           const TrueDistribution& d,
                                                           std::mt19937_64& stream);

// ---------------------------------------------------------------------------
// Coverage
// ---------------------------------------------------------------------------

struct CoverageReport {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double failure_rate = 0.0;
  double delta = 0.0;
  MethodConfig method;
  std::uint64_t seed = 0;

  friend bool operator==(const CoverageReport& a, const CoverageReport& b) {
    return a.trials == b.trials && a.failures == b.failures &&
           a.failure_rate == b.failure_rate && a.delta == b.delta && a.seed == b.seed &&
           a.method.method == b.method.method && a.method.side == b.method.side &&
           a.method.merged_categories == b.method.merged_categories &&
           a.method.allowed_failures == b.method.allowed_failures;
  }
};

/// delta + 3 sqrt(delta (1 - delta) / trials): the largest failure rate that
/// is still consistent with a valid bound at three standard errors.
[[nodiscard]] double coverage_tolerance(double delta, std::uint64_t trials);

[[nodiscard]] inline bool coverage_ok(const CoverageReport& r) {
  return r.failure_rate <= coverage_tolerance(r.delta, r.trials);
}

/// Counts the trials whose bound misses the true mean. A miss is strict:
/// true mean > upper (upper and two-sided) or true mean < lower (lower and
/// two-sided). `threads` == 0 picks the hardware concurrency; the report is
/// identical for every thread count.
[[nodiscard]] CoverageReport coverage_estimate(const MethodConfig& config,
                                               const TrueDistribution& d, std::int64_t n,
                                               double delta, std::uint64_t trials,
                                               std::uint64_t seed, unsigned threads = 0);

// ---------------------------------------------------------------------------
// Brute-force oracles for small instances
// ---------------------------------------------------------------------------

/// Constraints on a probability vector for grid search. Either part may be
/// empty. cumulative_lower[i] bounds p_1 + ... + p_{i+1} from below.
struct GridConstraints {
  std::vector<ProbabilityInterval> intervals;
  std::vector<double> cumulative_lower;
};

/// Maximum of p.v over simplex grid points j/N (N = round(1/resolution))
/// satisfying the constraints. Requires m <= 4 and resolution >= 1e-3.
/// Throws InfeasibleError when no grid point is feasible.
[[nodiscard]] double brute_force_max_mean(const GridConstraints& constraints,
                                          std::span<const double> values, double resolution);

/// Minimum over every contiguous h-partition of the largest cluster range.
/// Requires m <= 12 and 1 <= h <= m.
[[nodiscard]] double brute_force_merge(std::span<const double> values, std::size_t h);

/// Largest increase of the maximized p.v over all sets of at most `a` failed
/// frequency bounds, where the thresholds are the prefix sums of p and a
/// failed bound simply drops its constraint before re-maximizing.
/// Requires m <= 16.
[[nodiscard]] double brute_force_nu_correction(std::span<const double> p,
                                               std::span<const double> values, std::size_t a);

}  // namespace discbound
