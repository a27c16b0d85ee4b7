#include <boost/random/binomial_distribution.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include "discbound/errors.hpp"
#include "discbound/summation.hpp"
#include "discbound/verify.hpp"

namespace discbound {

TrueDistribution::TrueDistribution(std::vector<double> probabilities, std::vector<double> values)
    : p_(std::move(probabilities)), values_(std::move(values)) {
  if (p_.size() != values_.size() || p_.empty()) {
    throw ValidationError("distribution: probabilities and values must have equal, nonzero length");
  }
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (!(p_[i] >= 0.0)) throw ValidationError("distribution: negative probability");
    if (!std::isfinite(values_[i])) throw ValidationError("distribution: non-finite value");
    if (i > 0 && !(values_[i - 1] < values_[i])) {
      throw ValidationError("distribution: values must be strictly increasing");
    }
  }
  const double total = compensated_sum(p_);
  if (std::abs(total - 1.0) > 1e-12) {
    throw ValidationError("distribution: probabilities sum to " + std::to_string(total));
  }
  mean_ = compensated_dot(p_, values_);
}

TrueDistribution TrueDistribution::uniform(std::vector<double> values) {
  std::vector<double> p(values.size(), values.empty() ? 0.0 : 1.0 / static_cast<double>(values.size()));
  return TrueDistribution(std::move(p), std::move(values));
}

std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
  // seed_seq's mixing is fully specified by the standard, as is mt19937_64.
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

std::vector<std::int64_t> sample_multinomial(std::int64_t n, const TrueDistribution& d,
                                             std::mt19937_64& stream) {
  if (n < 1) throw ValidationError("multinomial: n must be positive");
  const auto& p = d.probabilities();
  const std::size_t m = p.size();
  std::vector<std::int64_t> counts(m, 0);

  std::int64_t remaining = n;
  CompensatedSum used_mass;
  for (std::size_t i = 0; i + 1 < m && remaining > 0; ++i) {
    const double mass_left = 1.0 - used_mass.value();
    used_mass += p[i];
    if (p[i] <= 0.0) continue;
    const double ratio = mass_left > 0.0 ? std::min(1.0, p[i] / mass_left) : 1.0;
    boost::random::binomial_distribution<std::int64_t, double> draw(remaining, ratio);
    counts[i] = draw(stream);
    remaining -= counts[i];
  }
  counts[m - 1] += remaining;
  return counts;
}

}  // namespace discbound
