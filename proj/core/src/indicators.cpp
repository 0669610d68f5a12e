// SPDX-License-Identifier: Apache-2.0
#include "citemetric/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "citemetric/csv.hpp"
#include "citemetric/error.hpp"
#include "citemetric/stats/summation.hpp"

namespace citemetric {

std::uint64_t h_index(std::span<const std::uint64_t> cites) {
  // Counting sort: bucket[k] = entries with min(c, n) == k.
  const std::size_t n = cites.size();
  std::vector<std::size_t> bucket(n + 1, 0);
  for (std::uint64_t c : cites) ++bucket[static_cast<std::size_t>(std::min<std::uint64_t>(c, n))];
  std::size_t at_least = 0;
  for (std::size_t k = n; k > 0; --k) {
    at_least += bucket[k];
    if (at_least >= k) return k;
  }
  return 0;
}

int pi_ld(const std::set<Library>& memberships) {
  int score = 0;
  for (Library lib : memberships) {
    switch (lib) {
      case Library::WoK:
      case Library::Scopus: score += 100; break;
      case Library::Redalyc:
      case Library::Scielo: score += 10; break;
      case Library::GoogleScholar: score += 1; break;
    }
  }
  return score;
}

int pi_ibnp(IbnpCategory category) {
  switch (category) {
    case IbnpCategory::A1: return 4;
    case IbnpCategory::A2: return 3;
    case IbnpCategory::B: return 2;
    case IbnpCategory::C: return 1;
  }
  return 1;
}

double log10_shifted(double x, LogMode mode) {
  if (mode == LogMode::Citation) {
    if (!(x >= 0.0)) throw Error(Errc::DomainError, "log10_shifted: negative citation count");
    return std::log10(x + 1.0);
  }
  if (!(x > 0.0))
    throw Error(Errc::DomainError, "log10_shifted: article count must be positive, got " +
                                       format_fixed(x, 4));
  return std::log10(x);
}

IndicatorSet compute_indicator_set(const JournalRecord& journal,
                                   std::span<const std::uint64_t> visible_cites,
                                   std::uint64_t air_ibnp) {
  IndicatorSet s;
  s.journal_id = journal.journal_id;
  s.title = journal.title;
  s.area = journal.area;
  s.category = journal.category;
  s.memberships = journal.memberships;
  s.air_ibnp = air_ibnp;
  s.air_ga = visible_cites.size();
  for (std::uint64_t c : visible_cites) {
    s.cr_ga += c;
    s.max_cites = std::max(s.max_cites, c);
  }
  if (air_ibnp > 0) {
    const double denom = static_cast<double>(air_ibnp);
    s.ca_mean = static_cast<double>(s.cr_ga) / denom;
    s.visibility_ratio = static_cast<double>(s.air_ga) / denom;
  }
  s.h = h_index(visible_cites);
  s.h_sc = journal.h_sc;
  s.pi_ld = pi_ld(journal.memberships);
  s.pi_ibnp = pi_ibnp(journal.category);
  return s;
}

AreaStats area_mean_citation(std::span<const IndicatorSet> sets, AreaMeanMode mode) {
  AreaStats out;
  out.mode = mode;
  stats::CompensatedSum ratios;
  std::uint64_t cites = 0;
  std::uint64_t articles = 0;
  for (const IndicatorSet& s : sets) {
    if (s.air_ibnp == 0 || !s.ca_mean) continue;
    if (out.journal_count == 0) out.area = s.area;
    ++out.journal_count;
    ratios += *s.ca_mean;
    cites += s.cr_ga;
    articles += s.air_ibnp;
  }
  if (out.journal_count == 0)
    throw Error(Errc::EmptyArea, "area mean: no journal with registry production");
  out.ca_mean_area = mode == AreaMeanMode::MeanOfRatios
                         ? ratios.value() / static_cast<double>(out.journal_count)
                         : static_cast<double>(cites) / static_cast<double>(articles);
  return out;
}

double cpn(const IndicatorSet& set, const AreaStats& area) {
  if (!(area.ca_mean_area > 0.0))
    throw Error(Errc::ZeroAreaMean, "cpn: area mean citation is zero");
  if (!set.ca_mean)
    throw Error(Errc::DomainError, "cpn: journal " + set.journal_id + " has no registry production");
  return *set.ca_mean / area.ca_mean_area;
}

std::vector<IndicatorSet> compute_corpus_indicators(const JournalCorpus& corpus, AreaMeanMode mode) {
  const auto visible = corpus.visible_articles();
  std::vector<IndicatorSet> sets;
  sets.reserve(corpus.journals.size());
  for (const JournalRecord& j : corpus.journals) {
    std::vector<std::uint64_t> cites;
    if (auto it = visible.find(j.journal_id); it != visible.end())
      for (const ArticleRecord* a : it->second) cites.push_back(a->cites);
    const auto total = corpus.ibnp_totals.find(j.journal_id);
    sets.push_back(compute_indicator_set(j, cites, total == corpus.ibnp_totals.end() ? 0 : total->second));
  }

  for (Area area : {Area::Ciencias, Area::CienciasSociales}) {
    std::vector<IndicatorSet> members;
    for (const auto& s : sets)
      if (s.area == area) members.push_back(s);
    if (members.empty()) continue;
    AreaStats stats;
    try {
      stats = area_mean_citation(members, mode);
    } catch (const Error& e) {
      if (e.code() == Errc::EmptyArea) continue;
      throw;
    }
    if (!(stats.ca_mean_area > 0.0)) continue;
    for (auto& s : sets)
      if (s.area == area && s.ca_mean) s.cpn = cpn(s, stats);
  }
  return sets;
}

MeanSd mean_sd(std::span<const double> values) {
  MeanSd out;
  out.n = values.size();
  if (values.empty()) return out;
  out.mean = stats::mean(values);
  if (values.size() >= 2)
    out.sd = std::sqrt(stats::centered_ss(values) / static_cast<double>(values.size() - 1));
  return out;
}

GroupSummary summarize_group(std::span<const IndicatorSet> sets, std::string label) {
  if (sets.empty()) throw Error(Errc::EmptyGroup, "group '" + label + "' has no journals");
  GroupSummary g;
  g.label = std::move(label);
  g.n_journals = sets.size();
  std::vector<double> log_cr, ca, ratio, log_air, pild;
  for (const IndicatorSet& s : sets) {
    g.total_articles += s.air_ibnp;
    g.total_ga_articles += s.air_ga;
    g.total_cites += s.cr_ga;
    log_cr.push_back(log10_shifted(static_cast<double>(s.cr_ga), LogMode::Citation));
    if (s.ca_mean) ca.push_back(*s.ca_mean);
    if (s.visibility_ratio) ratio.push_back(*s.visibility_ratio);
    if (s.air_ibnp >= 1)
      log_air.push_back(log10_shifted(static_cast<double>(s.air_ibnp), LogMode::ArticleCount));
    pild.push_back(static_cast<double>(s.pi_ld));
  }
  g.log10_cr = mean_sd(log_cr);
  g.ca = mean_sd(ca);
  g.ratio_ba = mean_sd(ratio);
  g.log10_air = mean_sd(log_air);
  g.pi_ld = mean_sd(pild);
  return g;
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string out(buf);
  if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

std::string indicators_csv(std::span<const IndicatorSet> sets) {
  auto opt_real = [](const std::optional<double>& v) { return v ? format_fixed(*v, 4) : std::string(); };
  std::string out(kIndicatorCsvHeader);
  out += '\n';
  for (const IndicatorSet& s : sets) {
    out += csv::format_row({
        s.journal_id,
        s.title,
        std::string(to_string(s.area)),
        std::string(to_string(s.category)),
        std::to_string(s.air_ibnp),
        std::to_string(s.air_ga),
        opt_real(s.visibility_ratio),
        std::to_string(s.cr_ga),
        opt_real(s.ca_mean),
        std::to_string(s.h),
        s.h_sc ? std::to_string(*s.h_sc) : std::string(),
        std::to_string(s.pi_ld),
        std::to_string(s.pi_ibnp),
        opt_real(s.cpn),
    });
  }
  return out;
}

}  // namespace citemetric
