#include "discbound/concentration.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "discbound/errors.hpp"
#include "discbound/sample.hpp"

namespace discbound {
namespace {

CategorizedSample balanced_linear(std::int64_t per_category) {
  return CategorizedSample(std::vector<std::int64_t>(10, per_category),
                           {0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
}

TEST(Hoeffding, ClosedForm) {
  const double eps = hoeffding_epsilon(9.0, 100, 0.05);
  EXPECT_NEAR(eps, 9.0 * std::sqrt(std::log(40.0) / 200.0), 1e-14);
  EXPECT_NEAR(eps, 1.2223, 1e-4);

  const auto b = hoeffding_bounds(balanced_linear(10), 0.05);
  EXPECT_NEAR(b.lower, 4.5 - eps, 1e-13);
  EXPECT_NEAR(b.upper, 4.5 + eps, 1e-13);
  EXPECT_NEAR(b.lower, 3.2777, 1e-4);
  EXPECT_NEAR(b.upper, 5.7223, 1e-4);
  EXPECT_EQ(b.method, Method::hoeffding);
}

TEST(Hoeffding, PositiveAndHalvesWithFourTimesN) {
  for (double delta : {1e-9, 0.05, 0.999}) {
    EXPECT_GT(hoeffding_epsilon(1e-6, 10, delta), 0.0);
    EXPECT_NEAR(hoeffding_epsilon(3.0, 400, delta), 0.5 * hoeffding_epsilon(3.0, 100, delta),
                1e-15);
  }
}

TEST(Hoeffding, Validation) {
  EXPECT_THROW((void)hoeffding_epsilon(1.0, 0, 0.05), DomainError);
  EXPECT_THROW((void)hoeffding_epsilon(1.0, 10, 0.0), ValidationError);
  EXPECT_THROW((void)hoeffding_epsilon(1.0, 10, 1.0), ValidationError);
  EXPECT_THROW((void)hoeffding_epsilon(-1.0, 10, 0.1), DomainError);
}

TEST(MaurerPontil, ClosedForm) {
  const double l80 = std::log(80.0);
  const double want = std::sqrt(2.0 * (825.0 / 99.0) * l80 / 100.0) + 63.0 * l80 / 297.0;
  const double eps = maurer_pontil_epsilon(825.0 / 99.0, 9.0, 100, 0.05);
  EXPECT_NEAR(eps, want, 1e-13);
  EXPECT_NEAR(eps, 1.7841, 1e-3);

  const auto b = maurer_pontil_bounds(balanced_linear(10), 0.05);
  EXPECT_NEAR(b.upper - b.lower, 2 * want, 1e-12);
}

TEST(MaurerPontil, ZeroVarianceLeavesRangeTerm) {
  const CategorizedSample s({100, 0}, {0.0, 1.0});
  const double eps = maurer_pontil_epsilon(sample_stats(s).variance, s.range(), 100, 0.05);
  EXPECT_DOUBLE_EQ(eps, 7.0 * std::log(80.0) / (3.0 * 99.0));
  const auto b = maurer_pontil_bounds(s, 0.05);
  EXPECT_EQ(b.lower, 0.0);  // clamped at v_1
  EXPECT_NEAR(b.upper, eps, 1e-15);
}

TEST(MaurerPontil, LinearInRange) {
  const double v = 2.0;
  const double first = std::sqrt(2.0 * v * std::log(40.0) / 50.0);
  const double a = maurer_pontil_epsilon(v, 3.0, 50, 0.1);
  const double b = maurer_pontil_epsilon(v, 6.0, 50, 0.1);
  EXPECT_NEAR(b - first, 2.0 * (a - first), 1e-13);
}

TEST(MaurerPontil, NeedsTwoObservations) {
  EXPECT_THROW((void)maurer_pontil_epsilon(0.0, 1.0, 1, 0.05), DomainError);
  EXPECT_THROW((void)maurer_pontil_bounds(CategorizedSample({1, 0}, {0.0, 1.0}), 0.05),
               DomainError);
}

TEST(Concentration, ClampedToSupport) {
  const CategorizedSample s({1, 1}, {0.0, 1.0});
  for (const auto& b : {hoeffding_bounds(s, 0.05), maurer_pontil_bounds(s, 0.05)}) {
    EXPECT_EQ(b.lower, 0.0);
    EXPECT_EQ(b.upper, 1.0);
  }
}

}  // namespace
}  // namespace discbound
