// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "citemetric/corpus.hpp"

namespace citemetric {

inline constexpr std::string_view kRegistryHeader =
    "journal_id,title,area,ibnp_category,air_ibnp,wok,scopus,redalyc,scielo,gscholar";
inline constexpr std::string_view kCitationExportHeader =
    "cites,authors,title,year,publication,publisher,url";
inline constexpr std::string_view kAliasHeader = "from_title,to_title";

struct Registry {
  std::vector<JournalRecord> journals;
  std::map<std::string, std::uint64_t> ibnp_totals;
};

/// Parse the journal registry CSV. The header must equal kRegistryHeader,
/// optionally followed by one extra `h_sc` column (empty cell = unknown).
Registry parse_registry(std::string_view content);

/// Parse one Publish-or-Perish style citation export. Every record comes
/// back with status Kept; an empty year cell yields a missing year.
std::vector<ArticleRecord> parse_citation_export(std::string_view content,
                                                 const std::string& journal_id);

/// Alias CSV: normalized from_title -> normalized to_title.
std::map<std::string, std::string> parse_alias_file(std::string_view content);

enum class DedupRule { SimilarTitle, CrossLanguageSuspect, IncompleteFields };

std::string_view to_string(DedupRule rule) noexcept;

struct DedupConfig {
  double title_threshold = 0.92;
  YearWindow window;
  // Keys and values are normalized titles (see text::normalize_title).
  std::map<std::string, std::string> alias_map;
};

struct DedupDecision {
  std::optional<std::size_t> kept_line;  // absent for IncompleteFields
  std::vector<std::size_t> dropped_lines;
  DedupRule rule = DedupRule::SimilarTitle;
  std::optional<double> similarity;  // SimilarTitle only: weakest linking pair
};

struct IngestReport {
  std::size_t rows_read = 0;
  std::size_t rows_kept = 0;  // includes flagged rows
  std::size_t rows_dropped_incomplete = 0;
  std::size_t rows_dropped_duplicate = 0;
  std::size_t rows_flagged_review = 0;
  std::vector<DedupDecision> decisions;

  IngestReport& operator+=(const IngestReport& other);
};

struct DedupOutcome {
  std::vector<ArticleRecord> records;  // input order, statuses assigned
  IngestReport report;
};

/// Apply the three cleaning criteria to one journal's records.
///
/// Incomplete rows (blank title, missing year or year outside the window)
/// are dropped first. Among the rest, titles whose normalized similarity
/// reaches the threshold are linked transitively; each linked group keeps
/// its most cited record (lowest line on ties). Finally, explicit aliases
/// drop the source title in favour of its target, and remaining pairs with
/// equal (year, cites) and disjoint title tokens are flagged NeedsReview.
///
/// Statuses on input records are ignored. Throws MixedJournal if the
/// records belong to more than one journal.
DedupOutcome deduplicate(std::vector<ArticleRecord> records, const DedupConfig& config);

/// Assemble a corpus from the registry and per-journal (deduplicated)
/// records. Throws UnknownJournal for record lists keyed by ids absent
/// from the registry, and InvalidCorpus if the result fails validation.
JournalCorpus build_corpus(const Registry& registry,
                           const std::map<std::string, std::vector<ArticleRecord>>& records,
                           YearWindow window);

}  // namespace citemetric
