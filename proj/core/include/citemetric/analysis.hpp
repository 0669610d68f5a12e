// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citemetric/corpus.hpp"
#include "citemetric/indicators.hpp"
#include "citemetric/stats/group_tests.hpp"
#include "citemetric/stats/pca.hpp"
#include "citemetric/stats/regression.hpp"

namespace citemetric {

/// Per-journal analysis variables. Log variables follow log10_shifted:
/// citation mode for cr_ga, article mode for the article counts (undefined
/// for a zero count).
enum class Variable {
  LogAirIbnp,
  LogAirGa,
  PiIbnp,
  PiLd,
  LogCrGa,
  CaMean,
  H,
  HSc,
  RatioBa,
  Cpn,
};

inline constexpr Variable kAllVariables[] = {
    Variable::LogAirIbnp, Variable::LogAirGa, Variable::PiIbnp, Variable::PiLd, Variable::LogCrGa,
    Variable::CaMean,     Variable::H,        Variable::HSc,    Variable::RatioBa, Variable::Cpn,
};

std::string_view to_string(Variable v) noexcept;
std::optional<Variable> parse_variable(std::string_view name) noexcept;

std::optional<double> variable_value(const IndicatorSet& set, Variable v);

/// Indicator sets of one area, CPN computed within that area.
std::vector<IndicatorSet> area_indicators(const JournalCorpus& corpus, Area area,
                                          AreaMeanMode mode = AreaMeanMode::MeanOfRatios);

enum class Dimension { ByLibrary, ByCategory };
enum class TestFamily { Parametric, RankBased };

std::string_view to_string(Dimension d) noexcept;
std::string_view to_string(TestFamily f) noexcept;

std::vector<Variable> default_comparison_variables(Dimension d);

struct GroupExclusion {
  std::string label;
  std::string reason;  // "n=0", "n=1"
};

struct VariableComparison {
  Variable variable = Variable::LogCrGa;
  std::vector<std::string> labels;      // groups that had values for this variable
  std::vector<MeanSd> summaries;        // per label
  std::optional<stats::TestResult> test;
  std::optional<stats::HomogeneousGroups> letters;
  std::string note;  // why test/letters are missing, empty otherwise
};

struct ComparisonTable {
  Dimension dimension = Dimension::ByCategory;
  Area area = Area::Ciencias;
  TestFamily method = TestFamily::Parametric;
  double alpha = 0.05;
  std::vector<GroupSummary> rows;  // included groups only
  std::vector<VariableComparison> variables;
  std::vector<GroupExclusion> excluded;
};

/// Library or category comparison over one area. ByLibrary groups overlap.
/// Groups with fewer than two journals are excluded; NoGroups when fewer
/// than two remain. Letters always come from Tukey-Kramer on the variable's
/// own scale, whatever the omnibus test.
ComparisonTable compare_groups(std::span<const IndicatorSet> sets, Area area, Dimension dimension,
                               std::span<const Variable> variables, TestFamily method,
                               double alpha = 0.05);
ComparisonTable compare_groups(const JournalCorpus& corpus, Area area, Dimension dimension,
                               std::span<const Variable> variables, TestFamily method,
                               double alpha = 0.05);

struct CorrelationMatrix {
  std::vector<Variable> variables;
  std::vector<std::vector<std::optional<double>>> r;        // unset when the pair is degenerate
  std::vector<std::vector<std::optional<double>>> p_value;  // unset with r
  std::vector<std::vector<std::size_t>> n;                  // pairwise sample sizes
  std::vector<std::vector<bool>> significant;
  double alpha = 0.05;
};

/// Spearman matrix with pairwise deletion. A pair with fewer than three
/// joint observations or a constant side has no r and is not significant.
/// TooFewJournals when fewer than three journals are supplied.
CorrelationMatrix correlation_matrix(std::span<const IndicatorSet> sets,
                                     std::span<const Variable> variables, double alpha = 0.05);
CorrelationMatrix correlation_matrix(const JournalCorpus& corpus, Area area,
                                     std::span<const Variable> variables, double alpha = 0.05);

inline constexpr double kCommunalityThreshold = 0.80;
inline constexpr double kLoadingThreshold = 0.7;

struct CitationFactorAnalysis {
  std::vector<Variable> variables;  // h, log_cr_ga, ca_mean
  stats::FactorResult factor;
  std::vector<bool> contributing;   // communality > 0.80 and loading > 0.7
  std::size_t n = 0;
};

/// First-factor extraction over h, log10(cr_ga + 1) and ca_mean for the
/// journals where all three are defined. TooFewJournals below four.
CitationFactorAnalysis citation_factor_analysis(std::span<const IndicatorSet> sets);
CitationFactorAnalysis citation_factor_analysis(const JournalCorpus& corpus, Area area);

enum class RegressionResponse { LogCr, H };

std::string_view to_string(RegressionResponse r) noexcept;

struct RegressionInputs {
  std::vector<double> y;
  std::vector<std::vector<double>> predictors;  // x1 = log10(air_ga), x2 = pi_ld
  std::vector<std::string> journal_ids;
};

/// Rows with air_ga >= 1; response is log10(cr_ga + 1) or h.
RegressionInputs regression_inputs(std::span<const IndicatorSet> sets, RegressionResponse response);

struct CitationRegression {
  RegressionResponse response = RegressionResponse::LogCr;
  std::vector<std::string> predictors;  // names, intercept excluded
  stats::RegressionResult fit;
};

/// TooFewJournals below five usable journals; otherwise ols_fit errors.
CitationRegression citation_regression(std::span<const IndicatorSet> sets, RegressionResponse response);
CitationRegression citation_regression(const JournalCorpus& corpus, Area area,
                                       RegressionResponse response);

}  // namespace citemetric
