// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace citemetric {

enum class Area { Ciencias, CienciasSociales };

enum class IbnpCategory { A1, A2, B, C };

enum class Library { WoK, Scopus, Redalyc, Scielo, GoogleScholar };

enum class ArticleStatus { Kept, DroppedIncomplete, DroppedDuplicate, NeedsReview };

inline constexpr Library kAllLibraries[] = {Library::WoK, Library::Scopus, Library::Redalyc,
                                            Library::Scielo, Library::GoogleScholar};
inline constexpr IbnpCategory kAllCategories[] = {IbnpCategory::A1, IbnpCategory::A2,
                                                  IbnpCategory::B, IbnpCategory::C};

std::string_view to_string(Area area) noexcept;
std::string_view to_string(IbnpCategory category) noexcept;
std::string_view to_string(Library library) noexcept;
std::string_view to_string(ArticleStatus status) noexcept;

std::optional<Area> parse_area(std::string_view text) noexcept;
std::optional<IbnpCategory> parse_category(std::string_view text) noexcept;
std::optional<Library> parse_library(std::string_view text) noexcept;
std::optional<ArticleStatus> parse_status(std::string_view text) noexcept;

/// Kept and NeedsReview records are the journal's visible production.
constexpr bool is_visible(ArticleStatus status) noexcept {
  return status == ArticleStatus::Kept || status == ArticleStatus::NeedsReview;
}

struct YearWindow {
  int start_year = 2003;
  int end_year = 2007;

  constexpr bool contains(int year) const noexcept {
    return year >= start_year && year <= end_year;
  }
  friend bool operator==(const YearWindow&, const YearWindow&) = default;
};

struct JournalRecord {
  std::string journal_id;
  std::string title;
  Area area = Area::Ciencias;
  IbnpCategory category = IbnpCategory::C;
  std::set<Library> memberships;
  // Scopus h-index, read from an external source when available.
  std::optional<std::uint64_t> h_sc;

  friend bool operator==(const JournalRecord&, const JournalRecord&) = default;
};

struct ArticleRecord {
  std::string journal_id;
  std::size_t line = 0;  // physical row in the citation export
  std::string title;
  std::optional<int> year;
  std::uint64_t cites = 0;
  std::string authors;
  std::string publication;
  std::string publisher;
  std::string url;
  ArticleStatus status = ArticleStatus::Kept;

  friend bool operator==(const ArticleRecord&, const ArticleRecord&) = default;
};

struct JournalCorpus {
  std::vector<JournalRecord> journals;
  std::vector<ArticleRecord> articles;
  std::map<std::string, std::uint64_t> ibnp_totals;  // AIR_IBNP per journal
  YearWindow window;

  const JournalRecord* find_journal(std::string_view journal_id) const;

  /// Visible (Kept or NeedsReview) records grouped by journal id.
  std::map<std::string, std::vector<const ArticleRecord*>> visible_articles() const;
};

/// Human-readable invariant violations; empty iff the corpus is valid.
std::vector<std::string> validate_corpus(const JournalCorpus& corpus);

JournalCorpus filter_by_area(const JournalCorpus& corpus, Area area);

}  // namespace citemetric
