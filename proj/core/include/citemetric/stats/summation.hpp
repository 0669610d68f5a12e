// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <span>

namespace citemetric::stats {

/// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  CompensatedSum& operator+=(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      carry_ += (sum_ - t) + x;
    else
      carry_ += (x - t) + sum_;
    sum_ = t;
    return *this;
  }

  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

inline double sum(std::span<const double> xs) noexcept {
  CompensatedSum s;
  for (double x : xs) s += x;
  return s.value();
}

inline double mean(std::span<const double> xs) noexcept {
  return sum(xs) / static_cast<double>(xs.size());
}

/// Sum of squared deviations about the mean (two-pass).
inline double centered_ss(std::span<const double> xs) noexcept {
  const double m = mean(xs);
  CompensatedSum s;
  for (double x : xs) s += (x - m) * (x - m);
  return s.value();
}

}  // namespace citemetric::stats
