// SPDX-License-Identifier: Apache-2.0
#include "citemetric/stats/ranks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "citemetric/error.hpp"
#include "citemetric/stats/distributions.hpp"
#include "citemetric/stats/summation.hpp"

namespace citemetric::stats {

std::vector<double> mid_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    // positions i..j-1 hold ranks i+1..j
    const double shared = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = shared;
    i = j;
  }
  return ranks;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw Error(Errc::LengthMismatch, "pearson: series lengths " + std::to_string(x.size()) +
                                          " and " + std::to_string(y.size()) + " differ");
  if (x.size() < 2) throw Error(Errc::DegenerateInput, "pearson: need at least two points");
  const double mx = mean(x);
  const double my = mean(y);
  CompensatedSum sxx, syy, sxy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx.value() <= 0.0 || syy.value() <= 0.0)
    throw Error(Errc::DegenerateInput, "pearson: constant series");
  const double r = sxy.value() / std::sqrt(sxx.value() * syy.value());
  return std::clamp(r, -1.0, 1.0);
}

CorrelationResult spearman(std::span<const double> x, std::span<const double> y, double alpha) {
  if (x.size() != y.size())
    throw Error(Errc::LengthMismatch, "spearman: series lengths " + std::to_string(x.size()) +
                                          " and " + std::to_string(y.size()) + " differ");
  if (x.size() < 3) throw Error(Errc::DegenerateInput, "spearman: need n >= 3");
  const auto rx = mid_ranks(x);
  const auto ry = mid_ranks(y);
  CorrelationResult out;
  out.n = x.size();
  out.r = pearson(rx, ry);
  const double df = static_cast<double>(out.n - 2);
  if (std::abs(out.r) >= 1.0) {
    out.p_value = 0.0;
  } else {
    const double t = out.r * std::sqrt(df / (1.0 - out.r * out.r));
    out.p_value = two_sided_t(df, t);
  }
  out.significant = out.p_value < alpha;
  return out;
}

}  // namespace citemetric::stats
