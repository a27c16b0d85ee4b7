#include "discbound/nest.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "discbound/binomial.hpp"
#include "discbound/errors.hpp"
#include "discbound/sample.hpp"
#include "discbound/verify.hpp"

namespace discbound {
namespace {

TEST(NestThresholds, TwoCategories) {
  const std::vector<std::int64_t> k{3, 7};
  const auto t = nest_thresholds(k, 0.05);
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0], 0.0);
  EXPECT_EQ(t[1], invert_lower({.n = 10, .k = 3, .delta = 0.05}));
  EXPECT_NEAR(t[1], 0.087264433914150306, 1e-12);
  EXPECT_EQ(t[2], 1.0);
}

TEST(NestThresholds, MassAtTopGivesZeroThresholds) {
  const std::vector<std::int64_t> k{0, 0, 0, 12};
  const auto t = nest_thresholds(k, 0.01);
  EXPECT_EQ(t, (std::vector<double>{0.0, 0.0, 0.0, 0.0, 1.0}));
  const std::vector<double> v{1.0, 2.0, 3.0, 8.0};
  EXPECT_EQ(nest_eval(k, v, 0.01).bound, 8.0);
}

TEST(NestThresholds, NondecreasingWithZeroCounts) {
  const std::vector<std::int64_t> k{5, 0, 0, 3, 0, 9};
  const auto t = nest_thresholds(k, 0.02);
  for (std::size_t i = 1; i < t.size(); ++i) EXPECT_LE(t[i - 1], t[i]);
}

TEST(NestEval, MaximizerIsThresholdDifferences) {
  const std::vector<std::int64_t> k{4, 6, 2, 8};
  const std::vector<double> v{0.0, 1.0, 4.0, 5.0};
  const auto sol = nest_eval(k, v, 0.03);
  const auto& t = sol.state.thresholds;
  double total = 0.0;
  double dot = 0.0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    EXPECT_DOUBLE_EQ(sol.state.maximizer[i], t[i + 1] - t[i]);
    EXPECT_GE(sol.state.maximizer[i], 0.0);
    total += sol.state.maximizer[i];
    dot += sol.state.maximizer[i] * v[i];
  }
  EXPECT_NEAR(total, 1.0, 1e-15);
  EXPECT_NEAR(sol.bound, dot, 1e-14);
}

TEST(NestBounds, TwoCategoriesIsBinomialInversion) {
  const CategorizedSample s({3, 7}, {0.0, 1.0});
  const auto upper = nest_bounds(s, 0.05, Side::upper);
  EXPECT_NEAR(upper.upper, 1.0 - invert_lower({.n = 10, .k = 3, .delta = 0.05}), 1e-12);

  const auto two = nest_bounds(s, 0.05, Side::two_sided);
  EXPECT_NEAR(two.upper, invert_upper({.n = 10, .k = 7, .delta = 0.025}), 1e-12);
  EXPECT_NEAR(two.lower, invert_lower({.n = 10, .k = 7, .delta = 0.025}), 1e-12);
}

TEST(NestBounds, BalancedThreeCategoriesMatchesGridSearch) {
  const CategorizedSample s({10, 10, 10}, {0.0, 1.0, 2.0});
  const double per_bound = 0.05 / 2.0;
  const auto t = nest_thresholds(s.counts(), per_bound);
  const double grid = brute_force_max_mean(
      {.intervals = {}, .cumulative_lower = {t[1], t[2]}}, s.values(), 1e-3);
  const double bound = nest_upper(s, per_bound);
  EXPECT_GE(bound + 1e-12, grid);
  EXPECT_LE(bound - grid, 2.0 * 3 * 1e-3);
}

TEST(NestBounds, ContainSampleMeanAndStayInRange) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 2 + rng() % 10;
    std::vector<std::int64_t> counts(m);
    std::vector<double> values(m);
    double v = -5.0;
    for (std::size_t i = 0; i < m; ++i) {
      counts[i] = static_cast<std::int64_t>(rng() % 50);
      v += 0.1 + static_cast<double>(rng() % 100) / 10.0;
      values[i] = v;
    }
    counts[rng() % m] += 1;
    const CategorizedSample s(counts, values);
    for (Side side : {Side::lower, Side::upper, Side::two_sided}) {
      const auto b = nest_bounds(s, 0.05, side);
      EXPECT_LE(s.min_value(), b.lower);
      EXPECT_LE(b.lower, sample_mean(s) + 1e-12);
      EXPECT_LE(sample_mean(s), b.upper + 1e-12);
      EXPECT_LE(b.upper, s.max_value());
    }
  }
}

TEST(NestBounds, Validation) {
  const CategorizedSample s({1, 2}, {0.0, 1.0});
  EXPECT_THROW((void)nest_bounds(s, 0.0, Side::upper), ValidationError);
  EXPECT_THROW((void)nest_bounds(s, 1.0, Side::upper), ValidationError);
  const std::vector<std::int64_t> k{1, 2};
  const std::vector<double> v{0.0, 1.0, 2.0};
  EXPECT_THROW((void)nest_eval(k, v, 0.1), ValidationError);
}

}  // namespace
}  // namespace discbound
