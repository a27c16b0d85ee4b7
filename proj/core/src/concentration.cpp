#include "discbound/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "discbound/errors.hpp"

namespace discbound {

namespace {

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ValidationError("delta must lie in (0, 1), got " + std::to_string(delta));
  }
}

BoundInterval clamped(const CategorizedSample& s, double mean, double eps, double delta,
                      Method method) {
  return BoundInterval{
      .lower = std::clamp(mean - eps, s.min_value(), s.max_value()),
      .upper = std::clamp(mean + eps, s.min_value(), s.max_value()),
      .delta = delta,
      .method = method,
      .side = Side::two_sided,
  };
}

}  // namespace

double hoeffding_epsilon(double range, std::int64_t n, double delta) {
  check_delta(delta);
  if (n < 1) throw DomainError("hoeffding: n must be positive");
  if (!(range >= 0.0)) throw DomainError("hoeffding: range must be nonnegative");
  return range * std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(n)));
}

double maurer_pontil_epsilon(double variance, double range, std::int64_t n, double delta) {
  check_delta(delta);
  if (n < 2) throw DomainError("maurer-pontil: needs at least two observations");
  if (!(range >= 0.0 && variance >= 0.0)) {
    throw DomainError("maurer-pontil: range and variance must be nonnegative");
  }
  const double log_term = std::log(4.0 / delta);
  const double nd = static_cast<double>(n);
  return std::sqrt(2.0 * variance * log_term / nd) + 7.0 * range * log_term / (3.0 * (nd - 1.0));
}

BoundInterval hoeffding_bounds(const CategorizedSample& s, double delta) {
  const double eps = hoeffding_epsilon(s.range(), s.total(), delta);
  return clamped(s, sample_mean(s), eps, delta, Method::hoeffding);
}

BoundInterval maurer_pontil_bounds(const CategorizedSample& s, double delta) {
  check_delta(delta);
  const SampleStats stats = sample_stats(s);
  const double eps = maurer_pontil_epsilon(stats.variance, stats.range, s.total(), delta);
  return clamped(s, stats.mean, eps, delta, Method::maurer_pontil);
}

}  // namespace discbound
