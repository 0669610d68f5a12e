// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

namespace citemetric::stats {

struct RegressionResult {
  std::vector<double> coefficients;  // intercept first, then one per predictor
  double r2 = 0.0;
  double r2_adjusted = 0.0;
  double f_statistic = 0.0;
  double f_df1 = 0.0;
  double f_df2 = 0.0;
  double f_p_value = 1.0;
  std::vector<double> sequential_ss;  // Type I, one per predictor in the given order
  double residual_ss = 0.0;
  double total_ss = 0.0;  // about the mean
  std::vector<double> vif;
  std::size_t n = 0;
};

/// Least squares with intercept via Householder QR on unit-norm columns.
/// sequential_ss[i] is the drop in residual SS when predictor i enters
/// after predictors 0..i-1. VIF_j = 1 / (1 - R^2_j) from regressing
/// predictor j on the others.
///
/// Throws LengthMismatch on ragged input, DegenerateInput unless
/// n > predictors + 1, and RankDeficient when the scaled design has a
/// condition estimate above 1e12 (a constant predictor trips this).
RegressionResult ols_fit(std::span<const double> y, const std::vector<std::vector<double>>& predictors);

}  // namespace citemetric::stats
