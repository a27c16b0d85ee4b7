#include "discbound/binomial.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "discbound/errors.hpp"
#include "exact_binomial.hpp"

namespace discbound {
namespace {

using testing::exact_cdf;
using testing::exact_invert_lower;
using testing::exact_invert_upper;
using testing::exact_rational;
using testing::float50_cdf;

// Width of the returned bracket is at most a couple of ulps near the root.
constexpr double kInvTol = 1e-12;

TEST(BinomCdf, ClosedFormCases) {
  EXPECT_NEAR(binom_cdf(1, 0, 0.3), 0.7, 1e-15);
  EXPECT_EQ(binom_cdf(10, 10, 0.42), 1.0);
  EXPECT_EQ(binom_cdf(10, -1, 0.42), 0.0);
  EXPECT_EQ(binom_cdf(10, 25, 0.42), 1.0);
  EXPECT_EQ(binom_cdf(10, 3, 0.0), 1.0);
  EXPECT_EQ(binom_cdf(10, 3, 1.0), 0.0);
}

TEST(BinomCdf, MatchesExactRationalAtHalf) {
  // Frozen from exact summation: 638/1024.
  EXPECT_NEAR(binom_cdf(10, 5, 0.5), 0.623046875, 1e-15);
  EXPECT_EQ(static_cast<double>(exact_cdf(10, 5, testing::Rational(1, 2))), 0.623046875);
}

TEST(BinomCdf, RejectsInvalidArguments) {
  EXPECT_THROW((void)binom_cdf(0, 0, 0.5), DomainError);
  EXPECT_THROW((void)binom_cdf(5, 2, -0.1), DomainError);
  EXPECT_THROW((void)binom_cdf(5, 2, 1.5), DomainError);
  EXPECT_THROW((void)binom_cdf(5, 2, std::nan("")), DomainError);
}

TEST(BinomCdf, RelativeErrorAgainstExactRationalSmallN) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 60);
    const std::int64_t k = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
    const double p = unit(rng);
    const double want = static_cast<double>(exact_cdf(n, k, exact_rational(p)));
    const double got = binom_cdf(n, k, p);
    if (want == 0.0) {
      EXPECT_LT(got, 1e-300);
    } else {
      EXPECT_LE(std::abs(got - want) / want, 1e-10) << "n=" << n << " k=" << k << " p=" << p;
    }
  }
}

TEST(BinomCdf, RelativeErrorAgainstExtendedPrecisionLargeN) {
  struct Case {
    std::int64_t n;
    std::int64_t k;
    double p;
  };
  // Tails from ~1e-40 up to ~1 - 1e-20, n up to 10^6.
  const Case cases[] = {
      {1000, 100, 0.2},      {1000, 200, 0.2},     {1000, 260, 0.2},    {5000, 2400, 0.5},
      {10000, 30, 0.005},    {10000, 9990, 0.999}, {100000, 49800, 0.5}, {100000, 1000, 0.0105},
      {1000000, 499000, 0.5}, {1000000, 1200, 0.001}, {1000000, 900, 0.001},
  };
  for (const auto& c : cases) {
    const double want = static_cast<double>(float50_cdf(c.n, c.k, c.p));
    const double got = binom_cdf(c.n, c.k, c.p);
    ASSERT_GT(want, 0.0);
    EXPECT_LE(std::abs(got - want) / want, 1e-10) << "n=" << c.n << " k=" << c.k << " p=" << c.p;
  }
}

TEST(BinomCdf, TailsSumToOne) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 2000);
    const std::int64_t k = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n + 1));
    const double p = unit(rng);
    EXPECT_NEAR(binom_cdf(n, k, p) + binom_sf(n, k, p), 1.0, 1e-10);
  }
}

TEST(InversionQuery, Validation) {
  EXPECT_NO_THROW((InversionQuery{.n = 5, .k = 5, .delta = 0.5}.validate()));
  EXPECT_THROW((InversionQuery{.n = 0, .k = 0, .delta = 0.5}.validate()), ValidationError);
  EXPECT_THROW((InversionQuery{.n = 5, .k = 6, .delta = 0.5}.validate()), ValidationError);
  EXPECT_THROW((InversionQuery{.n = 5, .k = -1, .delta = 0.5}.validate()), ValidationError);
  EXPECT_THROW((InversionQuery{.n = 5, .k = 1, .delta = 0.0}.validate()), ValidationError);
  EXPECT_THROW((InversionQuery{.n = 5, .k = 1, .delta = 1.0}.validate()), ValidationError);
  EXPECT_THROW((void)invert_upper({.n = 5, .k = 7, .delta = 0.1}), ValidationError);
}

TEST(InvertUpper, Examples) {
  EXPECT_NEAR(invert_upper({.n = 1, .k = 0, .delta = 0.05}), 0.95, kInvTol);
  EXPECT_EQ(invert_upper({.n = 7, .k = 7, .delta = 0.1}), 1.0);
  // Frozen from 40-digit bisection; the exact-rational oracle is checked below.
  const double root = invert_upper({.n = 10, .k = 5, .delta = 0.05});
  EXPECT_NEAR(root, 0.77755889899187092, kInvTol);
  EXPECT_GE(root, 0.76);
  EXPECT_LE(root, 0.80);
  EXPECT_NEAR(root, exact_invert_upper(10, 5, 0.05), kInvTol);
}

TEST(InvertLower, Examples) {
  EXPECT_EQ(invert_lower({.n = 12, .k = 0, .delta = 0.05}), 0.0);
  EXPECT_NEAR(invert_lower({.n = 1, .k = 1, .delta = 0.05}), 0.05, kInvTol);
  const double root = invert_lower({.n = 10, .k = 3, .delta = 0.05});
  EXPECT_NEAR(root, 0.087264433914150306, kInvTol);
  EXPECT_GE(root, 0.08);
  EXPECT_LE(root, 0.12);
  EXPECT_NEAR(root, exact_invert_lower(10, 3, 0.05), kInvTol);
}

TEST(Inversion, RoundsConservatively) {
  // Upper ends never fall below the exact root, lower ends never above it.
  for (std::int64_t n : {3, 10, 25}) {
    for (std::int64_t k = 0; k <= n; ++k) {
      for (double delta : {0.01, 0.05, 0.3}) {
        const double up = invert_upper({.n = n, .k = k, .delta = delta});
        const double lo = invert_lower({.n = n, .k = k, .delta = delta});
        EXPECT_GE(up, exact_invert_upper(n, k, delta, 56) - 1e-15);
        EXPECT_LE(lo, exact_invert_lower(n, k, delta, 56) + 1e-15);
      }
    }
  }
}

TEST(Inversion, SharpnessOfBisection) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 500);
    const std::int64_t k = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n + 1));
    const double delta = 0.001 + 0.9 * unit(rng);
    const double up = invert_upper({.n = n, .k = k, .delta = delta});
    if (k < n) {
      EXPECT_GE(binom_cdf(n, k, up - 2 * kInvTol), delta);
      if (up + 2 * kInvTol <= 1.0) EXPECT_LT(binom_cdf(n, k, up + 2 * kInvTol), delta);
    }
    const double lo = invert_lower({.n = n, .k = k, .delta = delta});
    if (k > 0) {
      EXPECT_GE(binom_sf(n, k - 1, lo + 2 * kInvTol), delta);
      if (lo - 2 * kInvTol >= 0.0) EXPECT_LT(binom_sf(n, k - 1, lo - 2 * kInvTol), delta);
    }
  }
}

TEST(Inversion, MonotoneInCountAndBudget) {
  for (std::int64_t n : {1, 7, 40, 300}) {
    for (double delta : {0.001, 0.05, 0.5}) {
      double prev_up = 0.0;
      double prev_lo = 0.0;
      for (std::int64_t k = 0; k <= n; ++k) {
        const double up = invert_upper({.n = n, .k = k, .delta = delta});
        const double lo = invert_lower({.n = n, .k = k, .delta = delta});
        EXPECT_GE(up, prev_up);
        EXPECT_GE(lo, prev_lo);
        EXPECT_LE(lo, up);
        prev_up = up;
        prev_lo = lo;

        const double up_loose = invert_upper({.n = n, .k = k, .delta = std::min(0.99, delta * 1.5)});
        const double lo_loose = invert_lower({.n = n, .k = k, .delta = std::min(0.99, delta * 1.5)});
        EXPECT_LE(up_loose, up);
        EXPECT_GE(lo_loose, lo);
      }
    }
  }
}

TEST(Inversion, FrequencySandwich) {
  for (std::int64_t n : {1, 2, 9, 50, 1000}) {
    for (double delta : {1e-6, 0.05, 0.5}) {
      for (std::int64_t k = 0; k <= n; k += std::max<std::int64_t>(1, n / 25)) {
        const double freq = static_cast<double>(k) / static_cast<double>(n);
        EXPECT_LE(invert_lower({.n = n, .k = k, .delta = delta}), freq);
        EXPECT_GE(invert_upper({.n = n, .k = k, .delta = delta}), freq);
      }
    }
  }
}

TEST(Inversion, UpperAndLowerAreMirrorImages) {
  // p+(n, k) = 1 - p-(n, n - k) by the symmetry X -> n - X.
  for (std::int64_t n : {5, 33}) {
    for (std::int64_t k = 0; k <= n; ++k) {
      EXPECT_NEAR(invert_upper({.n = n, .k = k, .delta = 0.05}),
                  1.0 - invert_lower({.n = n, .k = n - k, .delta = 0.05}), 1e-12);
    }
  }
}

}  // namespace
}  // namespace discbound
