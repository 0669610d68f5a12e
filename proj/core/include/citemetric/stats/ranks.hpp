// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace citemetric::stats {

/// Ranks 1..n with ties sharing the mean of the ranks they cover.
std::vector<double> mid_ranks(std::span<const double> values);

/// Pearson product-moment correlation. Throws LengthMismatch on unequal
/// lengths and DegenerateInput when either series is constant.
double pearson(std::span<const double> x, std::span<const double> y);

struct CorrelationResult {
  double r = 0.0;
  std::size_t n = 0;
  double p_value = 1.0;
  bool significant = false;  // p_value < alpha
};

/// Spearman rank correlation: Pearson on mid-ranks, two-sided p from the t
/// approximation with n - 2 degrees of freedom (p = 0 when |r| = 1).
/// Requires n >= 3.
CorrelationResult spearman(std::span<const double> x, std::span<const double> y,
                           double alpha = 0.05);

}  // namespace citemetric::stats
