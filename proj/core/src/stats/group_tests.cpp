// SPDX-License-Identifier: Apache-2.0
#include "citemetric/stats/group_tests.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "citemetric/error.hpp"
#include "citemetric/stats/distributions.hpp"
#include "citemetric/stats/ranks.hpp"
#include "citemetric/stats/summation.hpp"

namespace citemetric::stats {

std::string_view to_string(TestMethod method) noexcept {
  switch (method) {
    case TestMethod::AnovaF: return "AnovaF";
    case TestMethod::KruskalWallisH: return "KruskalWallisH";
    case TestMethod::SpearmanT: return "SpearmanT";
  }
  return "";
}

namespace {

std::size_t check_groups(const Groups& groups, const char* who) {
  if (groups.size() < 2)
    throw Error(Errc::TooFewGroups, std::string(who) + ": need at least two groups, got " +
                                        std::to_string(groups.size()));
  std::size_t n = 0;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].empty())
      throw Error(Errc::TooFewGroups, std::string(who) + ": group " + std::to_string(i) +
                                          " has no observations");
    n += groups[i].size();
  }
  return n;
}

}  // namespace

AnovaResult anova_oneway(const Groups& groups) {
  const std::size_t n = check_groups(groups, "anova");
  const std::size_t k = groups.size();
  if (n <= k)
    throw Error(Errc::TooFewGroups, "anova: need more observations than groups (n = " +
                                        std::to_string(n) + ", k = " + std::to_string(k) + ")");
  AnovaResult out;
  CompensatedSum grand;
  for (const auto& g : groups) {
    out.means.push_back(mean(g));
    out.sizes.push_back(g.size());
    for (double x : g) grand += x;
  }
  const double grand_mean = grand.value() / static_cast<double>(n);
  CompensatedSum ssb, ssw;
  for (std::size_t i = 0; i < k; ++i) {
    const double d = out.means[i] - grand_mean;
    ssb += static_cast<double>(groups[i].size()) * d * d;
    for (double x : groups[i]) ssw += (x - out.means[i]) * (x - out.means[i]);
  }
  const double df_between = static_cast<double>(k - 1);
  out.df_within = static_cast<double>(n - k);
  out.ms_within = ssw.value() / out.df_within;
  const double ms_between = ssb.value() / df_between;

  TestResult& t = out.test;
  t.method = TestMethod::AnovaF;
  t.df1 = df_between;
  t.df2 = out.df_within;
  t.n = n;
  if (ssb.value() <= 0.0) {
    t.statistic = 0.0;
    t.p_value = 1.0;
  } else if (ssw.value() <= 0.0) {
    t.statistic = std::numeric_limits<double>::infinity();
    t.p_value = 0.0;
  } else {
    t.statistic = ms_between / out.ms_within;
    t.p_value = tail_probability(Distribution::f(df_between, out.df_within), t.statistic);
  }
  return out;
}

TestResult kruskal_wallis(const Groups& groups) {
  const std::size_t n = check_groups(groups, "kruskal_wallis");
  if (n < 3)
    throw Error(Errc::TooFewGroups, "kruskal_wallis: need at least three observations");
  std::vector<double> pooled;
  pooled.reserve(n);
  for (const auto& g : groups) pooled.insert(pooled.end(), g.begin(), g.end());
  const auto ranks = mid_ranks(pooled);

  CompensatedSum weighted;  // sum of R_i^2 / n_i
  std::size_t offset = 0;
  for (const auto& g : groups) {
    CompensatedSum r;
    for (std::size_t i = 0; i < g.size(); ++i) r += ranks[offset + i];
    weighted += r.value() * r.value() / static_cast<double>(g.size());
    offset += g.size();
  }

  std::map<double, std::size_t> ties;
  for (double x : pooled) ++ties[x];
  double tie_sum = 0.0;
  for (const auto& [value, t] : ties) {
    const double tt = static_cast<double>(t);
    tie_sum += tt * tt * tt - tt;
  }
  const double nn = static_cast<double>(n);
  const double correction = 1.0 - tie_sum / (nn * nn * nn - nn);
  if (correction <= 0.0) throw Error(Errc::AllTied, "kruskal_wallis: all observations are tied");

  // H = [12 S - 3 n (n+1)^2] / [n (n+1)], one rounding for integer rank sums
  double h = (12.0 * weighted.value() - 3.0 * nn * (nn + 1.0) * (nn + 1.0)) / (nn * (nn + 1.0));
  h /= correction;
  if (h < 0.0) h = 0.0;  // cancellation noise when all groups share a rank mean

  TestResult t;
  t.method = TestMethod::KruskalWallisH;
  t.statistic = h;
  t.df1 = static_cast<double>(groups.size() - 1);
  t.n = n;
  t.p_value = tail_probability(Distribution::chi_squared(t.df1), h);
  return t;
}

bool HomogeneousGroups::share_letter(std::size_t i, std::size_t j) const {
  const auto& a = letters.at(i);
  const auto& b = letters.at(j);
  return std::any_of(a.begin(), a.end(), [&](char c) { return b.find(c) != std::string::npos; });
}

HomogeneousGroups tukey_groups(const Groups& groups, std::vector<std::string> labels,
                               double alpha) {
  const AnovaResult anova = anova_oneway(groups);
  const std::size_t k = groups.size();
  if (labels.empty())
    for (std::size_t i = 0; i < k; ++i) labels.push_back("g" + std::to_string(i + 1));
  if (labels.size() != k)
    throw Error(Errc::LengthMismatch, "tukey_groups: label count differs from group count");

  const double q = studentized_range_quantile(k, anova.df_within, alpha);
  HomogeneousGroups out;
  out.labels = std::move(labels);
  out.same.assign(k, std::vector<bool>(k, true));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const double se = std::sqrt(anova.ms_within / 2.0 *
                                  (1.0 / static_cast<double>(anova.sizes[i]) +
                                   1.0 / static_cast<double>(anova.sizes[j])));
      const bool differ = std::abs(anova.means[i] - anova.means[j]) > q * se;
      out.same[i][j] = out.same[j][i] = !differ;
    }
  }

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return anova.means[a] > anova.means[b];
  });

  out.letters.assign(k, "");
  char next = 'a';
  std::optional<std::size_t> last_end;
  for (std::size_t start = 0; start < k; ++start) {
    std::size_t end = start;
    while (end + 1 < k) {
      const std::size_t cand = order[end + 1];
      bool fits = true;
      for (std::size_t m = start; m <= end; ++m) fits = fits && out.same[order[m]][cand];
      if (!fits) break;
      ++end;
    }
    if (last_end && end <= *last_end) continue;
    for (std::size_t m = start; m <= end; ++m) out.letters[order[m]].push_back(next);
    ++next;
    last_end = end;
  }
  return out;
}

}  // namespace citemetric::stats
