#include "discbound/binomial.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <cmath>
#include <string>

#include "discbound/errors.hpp"

namespace discbound {

namespace {

void check_cdf_args(std::int64_t n, double p) {
  if (n < 1) {
    throw DomainError("binomial: trial count must be positive, got " + std::to_string(n));
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("binomial: probability must lie in [0, 1], got " + std::to_string(p));
  }
}

}  // namespace

void InversionQuery::validate() const {
  if (n < 1) {
    throw ValidationError("inversion: n must be >= 1, got " + std::to_string(n));
  }
  if (k < 0 || k > n) {
    throw ValidationError("inversion: k must lie in [0, n], got k=" + std::to_string(k) +
                          " n=" + std::to_string(n));
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ValidationError("inversion: delta must lie in (0, 1), got " + std::to_string(delta));
  }
}

// P[X <= k] = I_{1-p}(n-k, k+1) = 1 - I_p(k+1, n-k); ibetac evaluates the
// complement directly rather than subtracting from one.
double binom_cdf(std::int64_t n, std::int64_t k, double p) {
  check_cdf_args(n, p);
  if (k < 0) return 0.0;
  if (k >= n) return 1.0;
  if (p == 0.0) return 1.0;
  if (p == 1.0) return 0.0;
  return boost::math::ibetac(static_cast<double>(k + 1), static_cast<double>(n - k), p);
}

double binom_sf(std::int64_t n, std::int64_t k, double p) {
  check_cdf_args(n, p);
  if (k < 0) return 1.0;
  if (k >= n) return 0.0;
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;
  return boost::math::ibeta(static_cast<double>(k + 1), static_cast<double>(n - k), p);
}

double invert_upper(const InversionQuery& q) {
  q.validate();
  if (q.k >= q.n) return 1.0;

  // binom_cdf(lo) >= delta > binom_cdf(hi) throughout.
  double lo = 0.0;
  double hi = 1.0;
  for (int step = 0; step < kBisectionSteps; ++step) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (binom_cdf(q.n, q.k, mid) >= q.delta) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

double invert_lower(const InversionQuery& q) {
  q.validate();
  if (q.k == 0) return 0.0;

  // P[X >= k] = binom_sf(n, k - 1, .); tail(lo) < delta <= tail(hi) throughout.
  double lo = 0.0;
  double hi = 1.0;
  for (int step = 0; step < kBisectionSteps; ++step) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (binom_sf(q.n, q.k - 1, mid) >= q.delta) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo;
}

}  // namespace discbound
