#include "discbound/box.hpp"

#include <algorithm>
#include <string>

#include "discbound/binomial.hpp"
#include "discbound/errors.hpp"
#include "discbound/summation.hpp"

namespace discbound {

namespace {

// Slack admitted when checking that the box meets the simplex; the sums are
// built from values each rounded by at most one ulp.
constexpr double kFeasibilitySlack = 1e-12;

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ValidationError("delta must lie in (0, 1), got " + std::to_string(delta));
  }
}

// Greedy fill from the back. Order of `values` decides which end is favored,
// so feeding reversed inputs yields the minimizer.
BoxSolution fill_from_back(std::span<const ProbabilityInterval> intervals,
                           std::span<const double> values) {
  const std::size_t m = intervals.size();
  CompensatedSum lower_sum;
  CompensatedSum upper_sum;
  for (const auto& iv : intervals) {
    if (!(iv.lower <= iv.upper)) {
      throw ValidationError("box: interval lower end exceeds upper end");
    }
    lower_sum += iv.lower;
    upper_sum += iv.upper;
  }
  if (lower_sum.value() > 1.0 + kFeasibilitySlack) {
    throw InfeasibleError("box: lower ends sum to more than one");
  }
  if (upper_sum.value() < 1.0 - kFeasibilitySlack) {
    throw InfeasibleError("box: upper ends sum to less than one");
  }

  BoxSolution sol;
  sol.p.resize(m);
  for (std::size_t i = 0; i < m; ++i) sol.p[i] = intervals[i].lower;

  double headroom = std::max(0.0, 1.0 - lower_sum.value());
  for (std::size_t i = m; i-- > 0 && headroom > 0.0;) {
    const double add = std::min(headroom, intervals[i].upper - intervals[i].lower);
    sol.p[i] += add;
    headroom -= add;
  }
  sol.bound = compensated_dot(sol.p, values);
  return sol;
}

}  // namespace

std::vector<ProbabilityInterval> box_intervals(const CategorizedSample& s, double delta) {
  check_delta(delta);
  const double per_category = delta / (2.0 * static_cast<double>(s.size()));
  std::vector<ProbabilityInterval> out;
  out.reserve(s.size());
  for (std::int64_t k : s.counts()) {
    const InversionQuery q{.n = s.total(), .k = k, .delta = per_category};
    out.push_back({invert_lower(q), invert_upper(q)});
  }
  return out;
}

BoxSolution box_maximize(std::span<const ProbabilityInterval> intervals,
                         std::span<const double> values) {
  if (intervals.size() != values.size() || intervals.empty()) {
    throw ValidationError("box: need one interval per value");
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i - 1] < values[i])) {
      throw ValidationError("box: values must be strictly increasing");
    }
  }
  return fill_from_back(intervals, values);
}

BoundInterval box_bounds(const CategorizedSample& s, double delta, Side side) {
  const auto intervals = box_intervals(s, delta);
  BoundInterval out{
      .lower = s.min_value(),
      .upper = s.max_value(),
      .delta = delta,
      .method = Method::box,
      .side = side,
  };
  if (side != Side::lower) {
    out.upper = std::min(box_maximize(intervals, s.values()).bound, s.max_value());
  }
  if (side != Side::upper) {
    std::vector<ProbabilityInterval> rev_intervals(intervals.rbegin(), intervals.rend());
    std::vector<double> rev_values(s.values().rbegin(), s.values().rend());
    out.lower = std::max(fill_from_back(rev_intervals, rev_values).bound, s.min_value());
  }
  return out;
}

}  // namespace discbound
