// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace citemetric::stats {

/// Regularized incomplete beta I_x(a, b), a, b > 0, x in [0, 1].
double regularized_beta(double a, double b, double x);

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double regularized_gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x), computed
/// directly so small tails keep their relative accuracy.
double regularized_gamma_q(double a, double x);

struct Distribution {
  enum class Kind { StudentT, FisherF, ChiSquared };

  Kind kind;
  double df1;
  double df2 = 0.0;  // FisherF only

  static Distribution t(double df) { return {Kind::StudentT, df}; }
  static Distribution f(double df1, double df2) { return {Kind::FisherF, df1, df2}; }
  static Distribution chi_squared(double df) { return {Kind::ChiSquared, df}; }
};

/// Upper-tail probability P(X > x). For F and chi-squared any x <= 0 gives
/// 1; Student t is symmetric, so x = 0 gives 0.5. Throws DomainError on
/// non-positive degrees of freedom or non-finite x.
double tail_probability(const Distribution& dist, double x);

/// P(|T| > |t|) for Student t with df degrees of freedom.
double two_sided_t(double df, double t);

}  // namespace citemetric::stats
