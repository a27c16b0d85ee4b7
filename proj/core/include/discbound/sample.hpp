#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace discbound {

/// Observed category counts paired with strictly increasing category values.
///
/// Invariants, enforced on construction: at least two categories, equal
/// lengths, nonnegative counts with a positive total, finite and strictly
/// increasing values. Zero counts are allowed.
class CategorizedSample {
 public:
  CategorizedSample(std::vector<std::int64_t> counts, std::vector<double> values);

  [[nodiscard]] const std::vector<std::int64_t>& counts() const noexcept { return counts_; }
  [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }
  [[nodiscard]] std::size_t size() const noexcept { return counts_.size(); }
  [[nodiscard]] std::int64_t total() const noexcept { return total_; }

  [[nodiscard]] double min_value() const noexcept { return values_.front(); }
  [[nodiscard]] double max_value() const noexcept { return values_.back(); }
  [[nodiscard]] double range() const noexcept { return values_.back() - values_.front(); }

  friend bool operator==(const CategorizedSample&, const CategorizedSample&) = default;

 private:
  std::vector<std::int64_t> counts_;
  std::vector<double> values_;
  std::int64_t total_ = 0;
};

/// Sorts categories by value and merges categories sharing a value.
/// Throws ValidationError on mismatched lengths, negative counts, zero total,
/// non-finite values, or fewer than two distinct values.
[[nodiscard]] CategorizedSample normalize_sample(std::span<const std::int64_t> raw_counts,
                                                 std::span<const double> raw_values);

struct SampleStats {
  double mean = 0.0;
  double variance = 0.0;  // unbiased, divides by n - 1
  double range = 0.0;
};

[[nodiscard]] double sample_mean(const CategorizedSample& s);

/// Throws DomainError when the sample holds fewer than two observations.
[[nodiscard]] SampleStats sample_stats(const CategorizedSample& s);

}  // namespace discbound
