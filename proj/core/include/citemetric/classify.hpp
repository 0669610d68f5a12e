// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citemetric/corpus.hpp"
#include "citemetric/indicators.hpp"

namespace citemetric {

enum class QuartileMode { Empirical, Fixed };

std::string_view to_string(QuartileMode mode) noexcept;

/// Three h thresholds, non-increasing. Empirical bounds admit h >= cut,
/// fixed bounds (3, 2, 1) admit h > cut.
struct QuartileBounds {
  QuartileMode mode = QuartileMode::Fixed;
  std::array<std::uint64_t, 3> cuts{3, 2, 1};

  static QuartileBounds fixed();
  /// Cuts are the h values at ranks ceil(n/4), ceil(n/2), ceil(3n/4) of
  /// `ranked_h` (sorted descending). Empty input gives all-zero cuts.
  static QuartileBounds empirical(std::span<const std::uint64_t> ranked_h);

  int quartile_of(std::uint64_t h) const noexcept;
};

struct ClassificationRow {
  std::size_t rank = 0;
  std::string journal_id;
  std::string title;
  std::uint64_t h = 0;
  IbnpCategory category = IbnpCategory::C;
  double cpn = 0.0;
  int quartile = 0;  // 0 until assigned
};

/// Sort by (h desc, cpn desc, title asc) and number 1..n. MissingCpn names
/// the first journal without CPN.
std::vector<ClassificationRow> rank_journals(std::span<const IndicatorSet> sets);

void assign_quartiles(std::vector<ClassificationRow>& rows, const QuartileBounds& bounds);

/// Ranked and quartiled rows with bounds derived from `mode`.
std::vector<ClassificationRow> classify(std::span<const IndicatorSet> sets, QuartileMode mode);

enum class ReportFormat { Csv, Json, Markdown };

std::optional<ReportFormat> parse_report_format(std::string_view text) noexcept;

inline constexpr std::string_view kReportCsvHeader = "rank,title,h,category,cpn,quartile";

/// Deterministic report bytes. With `top_quartiles`, only rows whose
/// quartile is <= the cutoff are emitted. CPN carries two decimals in CSV
/// and Markdown; JSON keeps the full value.
std::string emit_report(std::span<const ClassificationRow> rows, ReportFormat format,
                        std::optional<int> top_quartiles = std::nullopt);

}  // namespace citemetric
