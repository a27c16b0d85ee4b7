#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace discbound {

// Neumaier's variant of Kahan summation. Unlike plain Kahan it stays exact
// when a summand is larger in magnitude than the running sum.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }

  [[nodiscard]] double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) noexcept {
  CompensatedSum acc;
  for (double x : xs) acc += x;
  return acc.value();
}

// Each product is split into its rounded value and exact error via fma, so
// the result is as accurate as if computed in twice the working precision.
inline double compensated_dot(std::span<const double> a, std::span<const double> b) noexcept {
  CompensatedSum acc;
  const std::size_t m = a.size() < b.size() ? a.size() : b.size();
  for (std::size_t i = 0; i < m; ++i) {
    const double prod = a[i] * b[i];
    acc += prod;
    acc += std::fma(a[i], b[i], -prod);
  }
  return acc.value();
}

}  // namespace discbound
