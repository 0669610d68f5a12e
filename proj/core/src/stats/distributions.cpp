// SPDX-License-Identifier: Apache-2.0
#include "citemetric/stats/distributions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "citemetric/error.hpp"

namespace citemetric::stats {

namespace {

constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;
constexpr int kMaxIterations = 2000;

// Continued fraction for I_x(a, b), modified Lentz evaluation.
double beta_continued_fraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) return h;
  }
  throw Error(Errc::NonConvergence, "incomplete beta continued fraction did not converge");
}

double gamma_series(double a, double x) {
  double ap = a;
  double term = 1.0 / a;
  double total = term;
  for (int n = 0; n < 100000; ++n) {
    ap += 1.0;
    term *= x / ap;
    total += term;
    if (std::abs(term) < std::abs(total) * kEps)
      return total * std::exp(-x + a * std::log(x) - std::lgamma(a));
  }
  throw Error(Errc::NonConvergence, "incomplete gamma series did not converge");
}

double gamma_continued_fraction(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 100000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps)
      return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
  }
  throw Error(Errc::NonConvergence, "incomplete gamma continued fraction did not converge");
}

void require_positive(double df, const char* what) {
  if (!(df > 0.0) || std::isnan(df))
    throw Error(Errc::DomainError, std::string(what) + " must be positive, got " +
                                       std::to_string(df));
}

}  // namespace

double regularized_beta(double a, double b, double x) {
  require_positive(a, "beta parameter a");
  require_positive(b, "beta parameter b");
  if (std::isnan(x) || x < 0.0 || x > 1.0)
    throw Error(Errc::DomainError, "incomplete beta argument outside [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double front = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                                a * std::log(x) + b * std::log1p(-x));
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_continued_fraction(a, b, x) / a;
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double regularized_gamma_p(double a, double x) {
  require_positive(a, "gamma parameter a");
  if (std::isnan(x) || x < 0.0) throw Error(Errc::DomainError, "incomplete gamma argument < 0");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_series(a, x);
  return 1.0 - gamma_continued_fraction(a, x);
}

double regularized_gamma_q(double a, double x) {
  require_positive(a, "gamma parameter a");
  if (std::isnan(x) || x < 0.0) throw Error(Errc::DomainError, "incomplete gamma argument < 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_series(a, x);
  return gamma_continued_fraction(a, x);
}

double two_sided_t(double df, double t) {
  require_positive(df, "degrees of freedom");
  if (std::isnan(t)) throw Error(Errc::DomainError, "t statistic is NaN");
  if (std::isinf(t)) return 0.0;
  if (t == 0.0) return 1.0;
  return regularized_beta(df / 2.0, 0.5, df / (df + t * t));
}

double tail_probability(const Distribution& dist, double x) {
  if (std::isnan(x)) throw Error(Errc::DomainError, "tail_probability: x is NaN");
  switch (dist.kind) {
    case Distribution::Kind::StudentT: {
      require_positive(dist.df1, "degrees of freedom");
      const double half = 0.5 * two_sided_t(dist.df1, x);
      return x >= 0.0 ? half : 1.0 - half;
    }
    case Distribution::Kind::FisherF: {
      require_positive(dist.df1, "numerator degrees of freedom");
      require_positive(dist.df2, "denominator degrees of freedom");
      if (x <= 0.0) return 1.0;
      if (std::isinf(x)) return 0.0;
      return regularized_beta(dist.df2 / 2.0, dist.df1 / 2.0,
                              dist.df2 / (dist.df2 + dist.df1 * x));
    }
    case Distribution::Kind::ChiSquared: {
      require_positive(dist.df1, "degrees of freedom");
      if (x <= 0.0) return 1.0;
      if (std::isinf(x)) return 0.0;
      return regularized_gamma_q(dist.df1 / 2.0, x / 2.0);
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace citemetric::stats
