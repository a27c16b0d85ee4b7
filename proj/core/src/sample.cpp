#include "discbound/sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "discbound/errors.hpp"
#include "discbound/summation.hpp"

namespace discbound {

CategorizedSample::CategorizedSample(std::vector<std::int64_t> counts, std::vector<double> values)
    : counts_(std::move(counts)), values_(std::move(values)) {
  if (counts_.size() != values_.size()) {
    throw ValidationError("sample: " + std::to_string(counts_.size()) + " counts but " +
                          std::to_string(values_.size()) + " values");
  }
  if (counts_.size() < 2) {
    throw ValidationError("sample: at least two categories are required");
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] < 0) {
      throw ValidationError("sample: negative count at category " + std::to_string(i));
    }
    if (!std::isfinite(values_[i])) {
      throw ValidationError("sample: non-finite value at category " + std::to_string(i));
    }
    if (i > 0 && !(values_[i - 1] < values_[i])) {
      throw ValidationError("sample: values must be strictly increasing (category " +
                            std::to_string(i) + ")");
    }
    total_ += counts_[i];
  }
  if (total_ < 1) {
    throw ValidationError("sample: total count must be positive");
  }
}

CategorizedSample normalize_sample(std::span<const std::int64_t> raw_counts,
                                   std::span<const double> raw_values) {
  if (raw_counts.size() != raw_values.size()) {
    throw ValidationError("sample: " + std::to_string(raw_counts.size()) + " counts but " +
                          std::to_string(raw_values.size()) + " values");
  }
  if (raw_counts.empty()) {
    throw ValidationError("sample: no categories");
  }
  for (std::size_t i = 0; i < raw_counts.size(); ++i) {
    if (raw_counts[i] < 0) {
      throw ValidationError("sample: negative count at row " + std::to_string(i));
    }
    if (!std::isfinite(raw_values[i])) {
      throw ValidationError("sample: non-finite value at row " + std::to_string(i));
    }
  }

  std::vector<std::size_t> order(raw_values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return raw_values[a] < raw_values[b]; });

  std::vector<std::int64_t> counts;
  std::vector<double> values;
  for (std::size_t idx : order) {
    if (!values.empty() && values.back() == raw_values[idx]) {
      counts.back() += raw_counts[idx];
    } else {
      values.push_back(raw_values[idx]);
      counts.push_back(raw_counts[idx]);
    }
  }
  return CategorizedSample(std::move(counts), std::move(values));
}

double sample_mean(const CategorizedSample& s) {
  CompensatedSum acc;
  for (std::size_t i = 0; i < s.size(); ++i) {
    acc += static_cast<double>(s.counts()[i]) * s.values()[i];
  }
  return acc.value() / static_cast<double>(s.total());
}

SampleStats sample_stats(const CategorizedSample& s) {
  if (s.total() < 2) {
    throw DomainError("sample variance needs at least two observations");
  }
  const double mean = sample_mean(s);
  CompensatedSum ss;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double d = s.values()[i] - mean;
    ss += static_cast<double>(s.counts()[i]) * d * d;
  }
  return SampleStats{
      .mean = mean,
      .variance = ss.value() / static_cast<double>(s.total() - 1),
      .range = s.range(),
  };
}

}  // namespace discbound
