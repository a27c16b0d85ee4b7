#include "discbound/nest.hpp"

#include <algorithm>
#include <string>

#include "discbound/binomial.hpp"
#include "discbound/errors.hpp"
#include "discbound/summation.hpp"

namespace discbound {

namespace {

void check_budget(double delta, const char* what) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ValidationError(std::string(what) + " must lie in (0, 1), got " + std::to_string(delta));
  }
}

}  // namespace

std::vector<double> nest_thresholds(std::span<const std::int64_t> counts, double per_bound_delta) {
  check_budget(per_bound_delta, "per-bound delta");
  if (counts.size() < 2) {
    throw ValidationError("nest: at least two categories are required");
  }
  std::int64_t n = 0;
  for (std::int64_t k : counts) {
    if (k < 0) throw ValidationError("nest: negative count");
    n += k;
  }
  if (n < 1) throw ValidationError("nest: total count must be positive");

  const std::size_t m = counts.size();
  std::vector<double> t(m + 1, 0.0);
  std::int64_t prefix = 0;
  for (std::size_t i = 1; i < m; ++i) {
    prefix += counts[i - 1];
    const double bound = invert_lower({.n = n, .k = prefix, .delta = per_bound_delta});
    t[i] = std::max(bound, t[i - 1]);
  }
  t[m] = 1.0;
  return t;
}

NestSolution nest_eval(std::span<const std::int64_t> counts, std::span<const double> values,
                       double per_bound_delta) {
  if (counts.size() != values.size()) {
    throw ValidationError("nest: counts and values differ in length");
  }
  NestSolution sol;
  sol.state.thresholds = nest_thresholds(counts, per_bound_delta);
  const auto& t = sol.state.thresholds;
  sol.state.maximizer.resize(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    sol.state.maximizer[i] = t[i + 1] - t[i];
  }
  sol.bound = compensated_dot(sol.state.maximizer, values);
  return sol;
}

double nest_upper(const CategorizedSample& s, double per_bound_delta) {
  const double b = nest_eval(s.counts(), s.values(), per_bound_delta).bound;
  return std::clamp(b, s.min_value(), s.max_value());
}

double nest_lower(const CategorizedSample& s, double per_bound_delta) {
  const std::vector<std::int64_t> rev_counts(s.counts().rbegin(), s.counts().rend());
  const std::vector<double> rev_values(s.values().rbegin(), s.values().rend());
  const double b = nest_eval(rev_counts, rev_values, per_bound_delta).bound;
  return std::clamp(b, s.min_value(), s.max_value());
}

BoundInterval nest_bounds(const CategorizedSample& s, double delta, Side side) {
  check_budget(delta, "delta");
  const double bounds_per_side = static_cast<double>(s.size() - 1);
  const double side_delta = side == Side::two_sided ? delta / 2.0 : delta;
  const double per_bound = side_delta / bounds_per_side;

  BoundInterval out{
      .lower = s.min_value(),
      .upper = s.max_value(),
      .delta = delta,
      .method = Method::nest,
      .side = side,
  };
  if (side != Side::lower) out.upper = nest_upper(s, per_bound);
  if (side != Side::upper) out.lower = nest_lower(s, per_bound);
  return out;
}

}  // namespace discbound
