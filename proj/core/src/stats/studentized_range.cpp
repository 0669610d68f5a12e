// SPDX-License-Identifier: Apache-2.0
#include <array>
#include <cmath>
#include <string>

#include "citemetric/error.hpp"
#include "citemetric/stats/group_tests.hpp"

namespace citemetric::stats {

namespace {

// q(0.05; k, df) for k = 2..10. Rows ordered by decreasing 1/df, the last
// row is df = infinity.
constexpr std::array<double, 12> kDf = {1, 2, 3, 4, 5, 10, 15, 20, 30, 60, 120, 0 /* inf */};
constexpr double kQ05[12][9] = {
    {17.9693, 26.9755, 32.8187, 37.0815, 40.4076, 43.1186, 45.3973, 47.3566, 49.0710},
    {6.0849, 8.3308, 9.7980, 10.8811, 11.7343, 12.4349, 13.0273, 13.5390, 13.9885},
    {4.5007, 5.9096, 6.8245, 7.5017, 8.0371, 8.4783, 8.8525, 9.1766, 9.4620},
    {3.9265, 5.0402, 5.7571, 6.2870, 6.7064, 7.0526, 7.3465, 7.6015, 7.8263},
    {3.6354, 4.6017, 5.2183, 5.6731, 6.0329, 6.3299, 6.5823, 6.8014, 6.9947},
    {3.1511, 3.8768, 4.3266, 4.6543, 4.9120, 5.1242, 5.3042, 5.4605, 5.5984},
    {3.0143, 3.6734, 4.0760, 4.3670, 4.5947, 4.7816, 4.9399, 5.0770, 5.1979},
    {2.9500, 3.5779, 3.9583, 4.2319, 4.4452, 4.6199, 4.7676, 4.8954, 5.0079},
    {2.8882, 3.4864, 3.8454, 4.1021, 4.3015, 4.4642, 4.6014, 4.7199, 4.8241},
    {2.8288, 3.3987, 3.7371, 3.9774, 4.1632, 4.3141, 4.4411, 4.5504, 4.6463},
    {2.8000, 3.3561, 3.6846, 3.9169, 4.0960, 4.2412, 4.3630, 4.4678, 4.5595},
    {2.7718, 3.3145, 3.6332, 3.8577, 4.0301, 4.1696, 4.2863, 4.3865, 4.4741},
};

double inverse_df(std::size_t row) { return kDf[row] == 0 ? 0.0 : 1.0 / kDf[row]; }

}  // namespace

double studentized_range_quantile(std::size_t k, double df, double alpha) {
  if (std::abs(alpha - 0.05) > 1e-12)
    throw Error(Errc::DomainError, "studentized range table covers alpha = 0.05 only");
  if (k < 2 || k > 10)
    throw Error(Errc::DomainError,
                "studentized range table covers 2..10 groups, got " + std::to_string(k));
  if (!(df >= 1.0))
    throw Error(Errc::DomainError, "studentized range needs df >= 1, got " + std::to_string(df));
  const std::size_t col = k - 2;
  const double x = std::isinf(df) ? 0.0 : 1.0 / df;
  for (std::size_t row = 0; row + 1 < kDf.size(); ++row) {
    const double hi = inverse_df(row);
    const double lo = inverse_df(row + 1);
    if (x <= hi && x >= lo) {
      const double w = (x - lo) / (hi - lo);
      return kQ05[row + 1][col] + w * (kQ05[row][col] - kQ05[row + 1][col]);
    }
  }
  return kQ05[kDf.size() - 1][col];
}

}  // namespace citemetric::stats
