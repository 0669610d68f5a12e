// SPDX-License-Identifier: Apache-2.0
#include "citemetric/stats/regression.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "citemetric/error.hpp"
#include "citemetric/stats/distributions.hpp"
#include "citemetric/stats/summation.hpp"

namespace citemetric::stats {

namespace {

constexpr double kConditionLimit = 1e12;

struct QrFit {
  std::vector<double> coefficients;
  std::vector<double> projections;  // Q^T y, length n
};

// Column-major QR of [1 | predictors] with each column scaled to unit norm.
QrFit qr_fit(std::span<const double> y, const std::vector<std::vector<double>>& predictors) {
  const std::size_t n = y.size();
  const std::size_t c = predictors.size() + 1;
  std::vector<std::vector<double>> a(c, std::vector<double>(n));
  std::vector<double> scale(c);
  for (std::size_t i = 0; i < n; ++i) a[0][i] = 1.0;
  for (std::size_t j = 1; j < c; ++j) std::copy(predictors[j - 1].begin(), predictors[j - 1].end(), a[j].begin());
  for (std::size_t j = 0; j < c; ++j) {
    CompensatedSum ss;
    for (double v : a[j]) ss += v * v;
    scale[j] = std::sqrt(ss.value());
    if (!(scale[j] > 0.0) || !std::isfinite(scale[j]))
      throw Error(Errc::RankDeficient, "ols: predictor " + std::to_string(j) + " is all zeros");
    for (double& v : a[j]) v /= scale[j];
  }

  std::vector<double> z(y.begin(), y.end());
  std::vector<double> diag(c);
  for (std::size_t k = 0; k < c; ++k) {
    CompensatedSum norm2;
    for (std::size_t i = k; i < n; ++i) norm2 += a[k][i] * a[k][i];
    const double norm = std::sqrt(norm2.value());
    if (norm == 0.0) {
      diag[k] = 0.0;
      continue;
    }
    const double alpha = a[k][k] > 0.0 ? -norm : norm;
    std::vector<double> v(a[k].begin() + static_cast<std::ptrdiff_t>(k), a[k].end());
    v[0] -= alpha;
    CompensatedSum vv;
    for (double x : v) vv += x * x;
    const double vnorm2 = vv.value();
    diag[k] = alpha;
    if (vnorm2 == 0.0) continue;
    auto reflect = [&](std::vector<double>& col) {
      CompensatedSum dot;
      for (std::size_t i = k; i < n; ++i) dot += v[i - k] * col[i];
      const double f = 2.0 * dot.value() / vnorm2;
      for (std::size_t i = k; i < n; ++i) col[i] -= f * v[i - k];
    };
    for (std::size_t j = k; j < c; ++j) reflect(a[j]);
    reflect(z);
  }

  double largest = 0.0;
  double smallest = std::numeric_limits<double>::infinity();
  for (double d : diag) {
    largest = std::max(largest, std::abs(d));
    smallest = std::min(smallest, std::abs(d));
  }
  if (smallest == 0.0 || largest / smallest > kConditionLimit)
    throw Error(Errc::RankDeficient, "ols: design matrix is numerically singular");

  std::vector<double> b(c);
  for (std::size_t k = c; k-- > 0;) {
    CompensatedSum s;
    s += z[k];
    for (std::size_t j = k + 1; j < c; ++j) s += -a[j][k] * b[j];
    b[k] = s.value() / a[k][k];
  }
  for (std::size_t j = 0; j < c; ++j) b[j] /= scale[j];
  return QrFit{std::move(b), std::move(z)};
}

double r_squared(std::span<const double> y, const QrFit& fit, std::size_t c) {
  CompensatedSum rss;
  for (std::size_t i = c; i < y.size(); ++i) rss += fit.projections[i] * fit.projections[i];
  const double tss = centered_ss(y);
  return tss > 0.0 ? 1.0 - rss.value() / tss : 0.0;
}

}  // namespace

RegressionResult ols_fit(std::span<const double> y,
                         const std::vector<std::vector<double>>& predictors) {
  const std::size_t n = y.size();
  const std::size_t p = predictors.size();
  for (const auto& col : predictors)
    if (col.size() != n)
      throw Error(Errc::LengthMismatch, "ols: predictor length " + std::to_string(col.size()) +
                                            " differs from response length " + std::to_string(n));
  if (n <= p + 1)
    throw Error(Errc::DegenerateInput, "ols: need more observations (" + std::to_string(n) +
                                           ") than parameters (" + std::to_string(p + 1) + ")");

  const QrFit fit = qr_fit(y, predictors);
  RegressionResult out;
  out.n = n;
  out.coefficients = fit.coefficients;

  CompensatedSum rss, ssr;
  for (std::size_t i = p + 1; i < n; ++i) rss += fit.projections[i] * fit.projections[i];
  for (std::size_t j = 1; j <= p; ++j) {
    const double ss = fit.projections[j] * fit.projections[j];
    out.sequential_ss.push_back(ss);
    ssr += ss;
  }
  out.residual_ss = rss.value();
  out.total_ss = centered_ss(y);

  const double nn = static_cast<double>(n);
  const double pp = static_cast<double>(p);
  out.r2 = out.total_ss > 0.0 ? 1.0 - out.residual_ss / out.total_ss : 0.0;
  out.r2_adjusted = 1.0 - (1.0 - out.r2) * (nn - 1.0) / (nn - pp - 1.0);

  out.f_df1 = pp;
  out.f_df2 = nn - pp - 1.0;
  if (p == 0 || ssr.value() <= 0.0 || out.total_ss <= 0.0) {
    out.f_statistic = 0.0;
    out.f_p_value = 1.0;
  } else if (out.residual_ss <= 0.0) {
    out.f_statistic = std::numeric_limits<double>::infinity();
    out.f_p_value = 0.0;
  } else {
    out.f_statistic = (ssr.value() / out.f_df1) / (out.residual_ss / out.f_df2);
    out.f_p_value = tail_probability(Distribution::f(out.f_df1, out.f_df2), out.f_statistic);
  }

  for (std::size_t j = 0; j < p; ++j) {
    if (p == 1) {
      out.vif.push_back(1.0);
      continue;
    }
    std::vector<std::vector<double>> others;
    for (std::size_t k = 0; k < p; ++k)
      if (k != j) others.push_back(predictors[k]);
    const QrFit aux = qr_fit(predictors[j], others);
    const double r2j = std::max(0.0, r_squared(predictors[j], aux, p));
    out.vif.push_back(r2j < 1.0 ? 1.0 / (1.0 - r2j) : std::numeric_limits<double>::infinity());
  }
  return out;
}

}  // namespace citemetric::stats
