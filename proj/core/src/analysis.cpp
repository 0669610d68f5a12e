// SPDX-License-Identifier: Apache-2.0
#include "citemetric/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "citemetric/error.hpp"
#include "citemetric/stats/ranks.hpp"

namespace citemetric {

namespace {

struct VariableName {
  Variable v;
  std::string_view name;
};

constexpr VariableName kVariableNames[] = {
    {Variable::LogAirIbnp, "log_air_ibnp"}, {Variable::LogAirGa, "log_air_ga"},
    {Variable::PiIbnp, "pi_ibnp"},          {Variable::PiLd, "pi_ld"},
    {Variable::LogCrGa, "log_cr_ga"},       {Variable::CaMean, "ca_mean"},
    {Variable::H, "h"},                     {Variable::HSc, "h_sc"},
    {Variable::RatioBa, "ratio_ba"},        {Variable::Cpn, "cpn"},
};

std::vector<IndicatorSet> of_area(std::span<const IndicatorSet> sets, Area area) {
  std::vector<IndicatorSet> out;
  for (const auto& s : sets)
    if (s.area == area) out.push_back(s);
  return out;
}

std::optional<double> log_count(std::uint64_t count) {
  if (count == 0) return std::nullopt;
  return log10_shifted(static_cast<double>(count), LogMode::ArticleCount);
}

}  // namespace

std::string_view to_string(Variable v) noexcept {
  for (const auto& [var, name] : kVariableNames)
    if (var == v) return name;
  return "";
}

std::optional<Variable> parse_variable(std::string_view name) noexcept {
  for (const auto& [var, n] : kVariableNames)
    if (n == name) return var;
  return std::nullopt;
}

std::optional<double> variable_value(const IndicatorSet& set, Variable v) {
  switch (v) {
    case Variable::LogAirIbnp: return log_count(set.air_ibnp);
    case Variable::LogAirGa: return log_count(set.air_ga);
    case Variable::PiIbnp: return static_cast<double>(set.pi_ibnp);
    case Variable::PiLd: return static_cast<double>(set.pi_ld);
    case Variable::LogCrGa: return log10_shifted(static_cast<double>(set.cr_ga), LogMode::Citation);
    case Variable::CaMean: return set.ca_mean;
    case Variable::H: return static_cast<double>(set.h);
    case Variable::HSc:
      if (!set.h_sc) return std::nullopt;
      return static_cast<double>(*set.h_sc);
    case Variable::RatioBa: return set.visibility_ratio;
    case Variable::Cpn: return set.cpn;
  }
  return std::nullopt;
}

std::vector<IndicatorSet> area_indicators(const JournalCorpus& corpus, Area area, AreaMeanMode mode) {
  return compute_corpus_indicators(filter_by_area(corpus, area), mode);
}

std::string_view to_string(Dimension d) noexcept {
  return d == Dimension::ByLibrary ? "library" : "category";
}

std::string_view to_string(TestFamily f) noexcept {
  return f == TestFamily::Parametric ? "parametric" : "rank";
}

std::vector<Variable> default_comparison_variables(Dimension d) {
  if (d == Dimension::ByLibrary) return {Variable::LogCrGa, Variable::CaMean};
  return {Variable::RatioBa, Variable::LogAirIbnp, Variable::PiLd, Variable::LogCrGa, Variable::CaMean};
}

ComparisonTable compare_groups(std::span<const IndicatorSet> all, Area area, Dimension dimension,
                               std::span<const Variable> variables, TestFamily method,
                               double alpha) {
  const auto sets = of_area(all, area);
  ComparisonTable table;
  table.dimension = dimension;
  table.area = area;
  table.method = method;
  table.alpha = alpha;

  std::vector<std::pair<std::string, std::vector<IndicatorSet>>> groups;
  if (dimension == Dimension::ByLibrary) {
    for (Library lib : kAllLibraries) {
      std::vector<IndicatorSet> members;
      for (const auto& s : sets)
        if (s.memberships.count(lib)) members.push_back(s);
      groups.emplace_back(std::string(to_string(lib)), std::move(members));
    }
  } else {
    for (IbnpCategory cat : kAllCategories) {
      std::vector<IndicatorSet> members;
      for (const auto& s : sets)
        if (s.category == cat) members.push_back(s);
      groups.emplace_back(std::string(to_string(cat)), std::move(members));
    }
  }

  std::vector<std::pair<std::string, std::vector<IndicatorSet>>> included;
  for (auto& [label, members] : groups) {
    if (members.size() < 2) {
      table.excluded.push_back({label, "n=" + std::to_string(members.size())});
      continue;
    }
    included.emplace_back(label, std::move(members));
  }
  if (included.size() < 2)
    throw Error(Errc::NoGroups, "compare " + std::string(to_string(dimension)) +
                                    ": fewer than two groups with at least two journals");

  for (const auto& [label, members] : included) table.rows.push_back(summarize_group(members, label));

  for (Variable v : variables) {
    VariableComparison vc;
    vc.variable = v;
    stats::Groups values;
    for (const auto& [label, members] : included) {
      std::vector<double> xs;
      for (const auto& s : members)
        if (auto x = variable_value(s, v)) xs.push_back(*x);
      if (xs.empty()) continue;
      vc.labels.push_back(label);
      vc.summaries.push_back(mean_sd(xs));
      values.push_back(std::move(xs));
    }
    if (values.size() < 2) {
      vc.note = "fewer than two groups have values";
      table.variables.push_back(std::move(vc));
      continue;
    }
    try {
      vc.test = method == TestFamily::Parametric ? stats::anova_oneway(values).test
                                                 : stats::kruskal_wallis(values);
    } catch (const Error& e) {
      vc.note = e.what();
    }
    try {
      vc.letters = stats::tukey_groups(values, vc.labels, alpha);
    } catch (const Error& e) {
      if (vc.note.empty()) vc.note = e.what();
    }
    table.variables.push_back(std::move(vc));
  }
  return table;
}

ComparisonTable compare_groups(const JournalCorpus& corpus, Area area, Dimension dimension,
                               std::span<const Variable> variables, TestFamily method,
                               double alpha) {
  return compare_groups(area_indicators(corpus, area), area, dimension, variables, method, alpha);
}

CorrelationMatrix correlation_matrix(std::span<const IndicatorSet> sets,
                                     std::span<const Variable> variables, double alpha) {
  if (sets.size() < 3)
    throw Error(Errc::TooFewJournals,
                "correlate: need at least three journals, got " + std::to_string(sets.size()));
  const std::size_t p = variables.size();
  CorrelationMatrix m;
  m.variables.assign(variables.begin(), variables.end());
  m.alpha = alpha;
  m.r.assign(p, std::vector<std::optional<double>>(p));
  m.p_value.assign(p, std::vector<std::optional<double>>(p));
  m.n.assign(p, std::vector<std::size_t>(p, 0));
  m.significant.assign(p, std::vector<bool>(p, false));

  std::vector<std::vector<std::optional<double>>> cols(p);
  for (std::size_t j = 0; j < p; ++j)
    for (const auto& s : sets) cols[j].push_back(variable_value(s, variables[j]));

  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i; j < p; ++j) {
      std::vector<double> x, y;
      for (std::size_t k = 0; k < sets.size(); ++k) {
        if (cols[i][k] && cols[j][k]) {
          x.push_back(*cols[i][k]);
          y.push_back(*cols[j][k]);
        }
      }
      m.n[i][j] = m.n[j][i] = x.size();
      if (i == j) {
        m.r[i][i] = 1.0;
        m.p_value[i][i] = 0.0;
        continue;
      }
      if (x.size() < 3) continue;
      try {
        const auto res = stats::spearman(x, y, alpha);
        m.r[i][j] = m.r[j][i] = res.r;
        m.p_value[i][j] = m.p_value[j][i] = res.p_value;
        m.significant[i][j] = m.significant[j][i] = res.significant;
      } catch (const Error& e) {
        if (e.code() != Errc::DegenerateInput) throw;
      }
    }
  }
  return m;
}

CorrelationMatrix correlation_matrix(const JournalCorpus& corpus, Area area,
                                     std::span<const Variable> variables, double alpha) {
  return correlation_matrix(area_indicators(corpus, area), variables, alpha);
}

CitationFactorAnalysis citation_factor_analysis(std::span<const IndicatorSet> sets) {
  CitationFactorAnalysis out;
  out.variables = {Variable::H, Variable::LogCrGa, Variable::CaMean};
  std::vector<std::vector<double>> cols(out.variables.size());
  for (const auto& s : sets) {
    std::vector<double> row;
    for (Variable v : out.variables)
      if (auto x = variable_value(s, v)) row.push_back(*x);
    if (row.size() != out.variables.size()) continue;
    for (std::size_t j = 0; j < row.size(); ++j) cols[j].push_back(row[j]);
  }
  out.n = cols.front().size();
  if (out.n < 4)
    throw Error(Errc::TooFewJournals,
                "factor: need at least four complete journals, got " + std::to_string(out.n));
  out.factor = stats::pca_unrotated(stats::Matrix::from_columns(cols));
  for (std::size_t j = 0; j < out.variables.size(); ++j)
    out.contributing.push_back(out.factor.communalities[j] > kCommunalityThreshold &&
                               out.factor.loadings[j] > kLoadingThreshold);
  return out;
}

CitationFactorAnalysis citation_factor_analysis(const JournalCorpus& corpus, Area area) {
  return citation_factor_analysis(area_indicators(corpus, area));
}

std::string_view to_string(RegressionResponse r) noexcept {
  return r == RegressionResponse::LogCr ? "log_cr_ga" : "h";
}

RegressionInputs regression_inputs(std::span<const IndicatorSet> sets, RegressionResponse response) {
  RegressionInputs in;
  in.predictors.resize(2);
  for (const auto& s : sets) {
    if (s.air_ga < 1) continue;
    in.y.push_back(response == RegressionResponse::LogCr
                       ? log10_shifted(static_cast<double>(s.cr_ga), LogMode::Citation)
                       : static_cast<double>(s.h));
    in.predictors[0].push_back(log10_shifted(static_cast<double>(s.air_ga), LogMode::ArticleCount));
    in.predictors[1].push_back(static_cast<double>(s.pi_ld));
    in.journal_ids.push_back(s.journal_id);
  }
  return in;
}

CitationRegression citation_regression(std::span<const IndicatorSet> sets, RegressionResponse response) {
  const RegressionInputs in = regression_inputs(sets, response);
  if (in.y.size() < 5)
    throw Error(Errc::TooFewJournals, "regress: need at least five journals with GA articles, got " +
                                          std::to_string(in.y.size()));
  CitationRegression out;
  out.response = response;
  out.predictors = {"log_air_ga", "pi_ld"};
  out.fit = stats::ols_fit(in.y, in.predictors);
  return out;
}

CitationRegression citation_regression(const JournalCorpus& corpus, Area area,
                                       RegressionResponse response) {
  return citation_regression(area_indicators(corpus, area), response);
}

}  // namespace citemetric
