// SPDX-License-Identifier: Apache-2.0
#include "citemetric/classify.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

#include "citemetric/csv.hpp"
#include "citemetric/error.hpp"

namespace citemetric {

std::string_view to_string(QuartileMode mode) noexcept {
  return mode == QuartileMode::Empirical ? "empirical" : "fixed";
}

QuartileBounds QuartileBounds::fixed() { return QuartileBounds{}; }

QuartileBounds QuartileBounds::empirical(std::span<const std::uint64_t> ranked_h) {
  QuartileBounds b;
  b.mode = QuartileMode::Empirical;
  const std::size_t n = ranked_h.size();
  if (n == 0) {
    b.cuts = {0, 0, 0};
    return b;
  }
  for (std::size_t q = 0; q < 3; ++q) {
    const std::size_t rank = ((q + 1) * n + 3) / 4;  // ceil((q+1) n / 4)
    b.cuts[q] = ranked_h[rank - 1];
  }
  return b;
}

int QuartileBounds::quartile_of(std::uint64_t h) const noexcept {
  for (int q = 0; q < 3; ++q) {
    const std::uint64_t cut = cuts[static_cast<std::size_t>(q)];
    if (mode == QuartileMode::Empirical ? h >= cut : h > cut) return q + 1;
  }
  return 4;
}

std::vector<ClassificationRow> rank_journals(std::span<const IndicatorSet> sets) {
  std::vector<ClassificationRow> rows;
  rows.reserve(sets.size());
  for (const IndicatorSet& s : sets) {
    if (!s.cpn)
      throw Error(Errc::MissingCpn, "classify: journal " + s.journal_id + " (" + s.title +
                                        ") has no CPN");
    ClassificationRow r;
    r.journal_id = s.journal_id;
    r.title = s.title;
    r.h = s.h;
    r.category = s.category;
    r.cpn = *s.cpn;
    rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end(), [](const ClassificationRow& a, const ClassificationRow& b) {
    if (a.h != b.h) return a.h > b.h;
    if (a.cpn != b.cpn) return a.cpn > b.cpn;
    if (a.title != b.title) return a.title < b.title;
    return a.journal_id < b.journal_id;
  });
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].rank = i + 1;
  return rows;
}

void assign_quartiles(std::vector<ClassificationRow>& rows, const QuartileBounds& bounds) {
  for (auto& r : rows) r.quartile = bounds.quartile_of(r.h);
}

std::vector<ClassificationRow> classify(std::span<const IndicatorSet> sets, QuartileMode mode) {
  auto rows = rank_journals(sets);
  if (mode == QuartileMode::Fixed) {
    assign_quartiles(rows, QuartileBounds::fixed());
  } else {
    std::vector<std::uint64_t> hs;
    for (const auto& r : rows) hs.push_back(r.h);
    assign_quartiles(rows, QuartileBounds::empirical(hs));
  }
  return rows;
}

std::optional<ReportFormat> parse_report_format(std::string_view text) noexcept {
  if (text == "csv") return ReportFormat::Csv;
  if (text == "json") return ReportFormat::Json;
  if (text == "md" || text == "markdown") return ReportFormat::Markdown;
  return std::nullopt;
}

namespace {

std::string markdown_cell(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '|') out += "\\|";
    else if (c == '\n' || c == '\r') out += ' ';
    else out += c;
  }
  return out;
}

}  // namespace

std::string emit_report(std::span<const ClassificationRow> all, ReportFormat format,
                        std::optional<int> top_quartiles) {
  std::vector<ClassificationRow> rows;
  for (const auto& r : all)
    if (!top_quartiles || r.quartile <= *top_quartiles) rows.push_back(r);

  std::string out;
  switch (format) {
    case ReportFormat::Csv:
      out = std::string(kReportCsvHeader) + "\n";
      for (const auto& r : rows)
        out += csv::format_row({std::to_string(r.rank), r.title, std::to_string(r.h),
                                std::string(to_string(r.category)), format_fixed(r.cpn, 2),
                                std::to_string(r.quartile)});
      break;
    case ReportFormat::Json: {
      auto doc = nlohmann::ordered_json::array();
      for (const auto& r : rows)
        doc.push_back({{"rank", r.rank},
                       {"title", r.title},
                       {"h", r.h},
                       {"category", to_string(r.category)},
                       {"cpn", r.cpn},
                       {"quartile", r.quartile}});
      out = doc.dump(2, ' ', false, nlohmann::ordered_json::error_handler_t::replace) + "\n";
      break;
    }
    case ReportFormat::Markdown:
      out = "| rank | title | h | category | cpn | quartile |\n|---:|---|---:|---|---:|---:|\n";
      for (const auto& r : rows)
        out += "| " + std::to_string(r.rank) + " | " + markdown_cell(r.title) + " | " +
               std::to_string(r.h) + " | " + std::string(to_string(r.category)) + " | " +
               format_fixed(r.cpn, 2) + " | " + std::to_string(r.quartile) + " |\n";
      break;
  }
  return out;
}

}  // namespace citemetric
