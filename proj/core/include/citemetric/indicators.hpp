// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "citemetric/corpus.hpp"

namespace citemetric {

/// Largest k such that at least k entries are >= k; 0 for an empty list.
std::uint64_t h_index(std::span<const std::uint64_t> cites);

/// Digital-library indexation score: 100 each for WoK and Scopus, 10 each
/// for Redalyc and Scielo, 1 for Google Scholar (range 0..221).
int pi_ld(const std::set<Library>& memberships);

/// IBNP score: A1 = 4, A2 = 3, B = 2, C = 1.
int pi_ibnp(IbnpCategory category);

enum class LogMode {
  Citation,      // log10(x + 1), defined for x >= 0
  ArticleCount,  // log10(x), DomainError for x <= 0
};

double log10_shifted(double x, LogMode mode);

struct IndicatorSet {
  std::string journal_id;
  std::string title;
  Area area = Area::Ciencias;
  IbnpCategory category = IbnpCategory::C;
  std::set<Library> memberships;
  std::uint64_t air_ibnp = 0;
  std::uint64_t air_ga = 0;
  std::uint64_t cr_ga = 0;
  std::uint64_t max_cites = 0;
  std::optional<double> ca_mean;           // cr_ga / air_ibnp; unset when air_ibnp == 0
  std::optional<double> visibility_ratio;  // air_ga / air_ibnp; unset when air_ibnp == 0
  std::uint64_t h = 0;
  std::optional<std::uint64_t> h_sc;
  int pi_ld = 0;
  int pi_ibnp = 1;
  std::optional<double> cpn;  // set by area aggregation
};

/// Per-journal indicators from the cites of its visible records.
IndicatorSet compute_indicator_set(const JournalRecord& journal,
                                   std::span<const std::uint64_t> visible_cites,
                                   std::uint64_t air_ibnp);

enum class AreaMeanMode { MeanOfRatios, Pooled };

struct AreaStats {
  Area area = Area::Ciencias;
  double ca_mean_area = 0.0;
  std::size_t journal_count = 0;  // journals with air_ibnp > 0
  AreaMeanMode mode = AreaMeanMode::MeanOfRatios;
};

/// Expected citations per article in an area: the mean of the journals'
/// ca_mean (default) or sum(cr_ga) / sum(air_ibnp). Journals with
/// air_ibnp == 0 are skipped; EmptyArea if none remain.
AreaStats area_mean_citation(std::span<const IndicatorSet> sets,
                             AreaMeanMode mode = AreaMeanMode::MeanOfRatios);

/// Observed / expected citations per article. Throws ZeroAreaMean, and
/// DomainError when the journal's ca_mean is undefined.
double cpn(const IndicatorSet& set, const AreaStats& area);

/// Indicators for every journal of `corpus` in corpus order, with CPN
/// filled in wherever it is defined (never when the area mean is zero).
std::vector<IndicatorSet> compute_corpus_indicators(const JournalCorpus& corpus,
                                                    AreaMeanMode mode = AreaMeanMode::MeanOfRatios);

struct MeanSd {
  std::size_t n = 0;           // values that entered the statistic
  std::optional<double> mean;  // unset when n == 0
  std::optional<double> sd;    // sample sd, unset when n < 2
};

MeanSd mean_sd(std::span<const double> values);

struct GroupSummary {
  std::string label;
  std::size_t n_journals = 0;
  std::uint64_t total_articles = 0;     // sum of air_ibnp
  std::uint64_t total_ga_articles = 0;  // sum of air_ga
  std::uint64_t total_cites = 0;        // sum of cr_ga
  MeanSd log10_cr;                      // log10(cr_ga + 1)
  MeanSd ca;                            // ca_mean where defined
  MeanSd ratio_ba;                      // visibility ratio where defined
  MeanSd log10_air;                     // log10(air_ibnp) where air_ibnp >= 1
  MeanSd pi_ld;
};

/// Totals and per-journal means/sds of a group. Throws EmptyGroup.
GroupSummary summarize_group(std::span<const IndicatorSet> sets, std::string label);

inline constexpr std::string_view kIndicatorCsvHeader =
    "journal_id,title,area,category,air_ibnp,air_ga,ratio_ba,cr_ga,ca_mean,h,h_sc,pi_ld,pi_ibnp,cpn";

/// Indicator table: reals with four decimals, undefined values as empty cells.
std::string indicators_csv(std::span<const IndicatorSet> sets);

/// Fixed-point rendering with `decimals` places ("-0.0000" never occurs).
std::string format_fixed(double value, int decimals);

}  // namespace citemetric
