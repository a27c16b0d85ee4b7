#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "discbound/errors.hpp"
#include "discbound/nest.hpp"
#include "discbound/refinement.hpp"
#include "discbound/summation.hpp"

namespace discbound {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_inputs(std::span<const double> p, std::span<const double> values) {
  if (p.size() != values.size() || p.size() < 2) {
    throw ValidationError("nearly uniform: p and values must have equal length >= 2");
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] >= 0.0)) throw ValidationError("nearly uniform: p has a negative entry");
    if (i > 0 && !(values[i - 1] < values[i])) {
      throw ValidationError("nearly uniform: values must be strictly increasing");
    }
  }
  if (std::abs(compensated_sum(p) - 1.0) > 1e-9) {
    throw ValidationError("nearly uniform: p must sum to one");
  }
}

}  // namespace

double nu_delta(std::size_t run, std::size_t prefix, std::span<const double> p,
                std::span<const double> values) {
  if (p.size() != values.size()) {
    throw ValidationError("nu_delta: p and values differ in length");
  }
  if (prefix > p.size() || run >= prefix) {
    throw DomainError("nu_delta: need 0 <= run < prefix <= m, got run=" + std::to_string(run) +
                      " prefix=" + std::to_string(prefix));
  }
  const double top = values[prefix - 1];
  CompensatedSum acc;
  for (std::size_t b = 1; b <= run; ++b) {
    acc += p[prefix - 1 - b] * (top - values[prefix - 1 - b]);
  }
  return acc.value();
}

NuCorrection nu_correction(std::span<const double> p, std::span<const double> values,
                           std::size_t a) {
  check_inputs(p, values);
  const std::size_t m = p.size();
  if (a > m - 2) {
    throw DomainError("nearly uniform: allowed failures must lie in [0, " + std::to_string(m - 2) +
                      "], got " + std::to_string(a));
  }

  NuCorrection out;
  out.allowed_failures = a;
  out.table.assign(m + 1, std::vector<double>(a + 1, kNegInf));
  auto& c = out.table;
  c[0][0] = 0.0;
  for (std::size_t i = 1; i <= m; ++i) {
    // run_gain[h] = nu_delta(h, i), accumulated one failure at a time.
    std::vector<double> run_gain(std::min(a, i - 1) + 1, 0.0);
    for (std::size_t h = 1; h < run_gain.size(); ++h) {
      run_gain[h] = run_gain[h - 1] + p[i - 1 - h] * (values[i - 1] - values[i - 1 - h]);
    }
    for (std::size_t j = 0; j <= a; ++j) {
      double best = kNegInf;
      for (std::size_t h = 0; h <= j && h < i; ++h) {
        const double prev = c[i - 1 - h][j - h];
        if (prev == kNegInf) continue;
        best = std::max(best, prev + run_gain[h]);
      }
      c[i][j] = best;
    }
  }
  out.correction = c[m][a];
  return out;
}

BoundInterval nearly_uniform_nest_bounds(const CategorizedSample& s, double delta, std::size_t a,
                                         Side side) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ValidationError("delta must lie in (0, 1), got " + std::to_string(delta));
  }
  const std::size_t m = s.size();
  if (a > m - 2) {
    throw DomainError("nearly uniform: allowed failures must lie in [0, " + std::to_string(m - 2) +
                      "], got " + std::to_string(a));
  }
  const double side_delta = side == Side::two_sided ? delta / 2.0 : delta;
  const double per_bound =
      static_cast<double>(a + 1) * side_delta / static_cast<double>(m - 1);

  BoundInterval out{
      .lower = s.min_value(),
      .upper = s.max_value(),
      .delta = delta,
      .method = Method::nearly_uniform,
      .side = side,
  };
  if (side != Side::lower) {
    const NestSolution sol = nest_eval(s.counts(), s.values(), per_bound);
    const double corr = a == 0 ? 0.0 : nu_correction(sol.state.maximizer, s.values(), a).correction;
    out.upper = std::clamp(sol.bound + corr, s.min_value(), s.max_value());
  }
  if (side != Side::upper) {
    const std::vector<std::int64_t> rev_counts(s.counts().rbegin(), s.counts().rend());
    const std::vector<double> rev_values(s.values().rbegin(), s.values().rend());
    const NestSolution sol = nest_eval(rev_counts, rev_values, per_bound);
    std::vector<double> negated(rev_values.size());
    std::transform(rev_values.begin(), rev_values.end(), negated.begin(),
                   [](double v) { return -v; });
    const double corr = a == 0 ? 0.0 : nu_correction(sol.state.maximizer, negated, a).correction;
    out.lower = std::clamp(sol.bound - corr, s.min_value(), s.max_value());
  }
  return out;
}

}  // namespace discbound
