// SPDX-License-Identifier: Apache-2.0
#include "citemetric/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_map>

#include "citemetric/csv.hpp"
#include "citemetric/error.hpp"
#include "citemetric/text.hpp"

namespace citemetric {

std::string_view to_string(DedupRule rule) noexcept {
  switch (rule) {
    case DedupRule::SimilarTitle: return "SimilarTitle";
    case DedupRule::CrossLanguageSuspect: return "CrossLanguageSuspect";
    case DedupRule::IncompleteFields: return "IncompleteFields";
  }
  return "";
}

IngestReport& IngestReport::operator+=(const IngestReport& other) {
  rows_read += other.rows_read;
  rows_kept += other.rows_kept;
  rows_dropped_incomplete += other.rows_dropped_incomplete;
  rows_dropped_duplicate += other.rows_dropped_duplicate;
  rows_flagged_review += other.rows_flagged_review;
  decisions.insert(decisions.end(), other.decisions.begin(), other.decisions.end());
  return *this;
}

namespace {

std::string join_header(const std::vector<std::string>& header) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out.push_back(',');
    out += header[i];
  }
  return out;
}

template <typename Int>
std::optional<Int> parse_int(std::string_view cell) {
  const std::string t = text::trim(cell);
  if (t.empty()) return std::nullopt;
  Int value{};
  const auto* first = t.data();
  const auto* last = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

std::uint64_t require_count(const csv::RawRow& row, std::size_t col, std::string_view what) {
  const auto& cell = row.fields[col];
  const std::string t = text::trim(cell);
  if (t.empty() || t.front() == '-' || t.front() == '+')
    throw ParseError(Errc::BadCell, row.line_number, col + 1,
                     std::string(what) + " must be a non-negative integer, got '" + cell + "'");
  auto v = parse_int<std::uint64_t>(t);
  if (!v)
    throw ParseError(Errc::BadCell, row.line_number, col + 1,
                     std::string(what) + " must be a non-negative integer, got '" + cell + "'");
  return *v;
}

bool require_flag(const csv::RawRow& row, std::size_t col) {
  const std::string t = text::trim(row.fields[col]);
  if (t == "1") return true;
  if (t == "0") return false;
  throw ParseError(Errc::BadCell, row.line_number, col + 1,
                   "membership flag must be 0 or 1, got '" + row.fields[col] + "'");
}

}  // namespace

Registry parse_registry(std::string_view content) {
  const csv::Table table = csv::parse(content);
  const std::string header = join_header(table.header);
  bool with_h_sc = false;
  if (header != kRegistryHeader) {
    if (header == std::string(kRegistryHeader) + ",h_sc") {
      with_h_sc = true;
    } else {
      throw ParseError(Errc::MalformedHeader, 1, 0,
                       "registry header must be '" + std::string(kRegistryHeader) + "', got '" +
                           header + "'");
    }
  }

  Registry registry;
  for (const auto& row : table.rows) {
    JournalRecord j;
    j.journal_id = text::trim(row.fields[0]);
    if (j.journal_id.empty())
      throw ParseError(Errc::BadCell, row.line_number, 1, "empty journal_id");
    j.title = text::trim(row.fields[1]);
    if (j.title.empty()) throw ParseError(Errc::BadCell, row.line_number, 2, "empty title");
    const auto area = parse_area(text::trim(row.fields[2]));
    if (!area)
      throw ParseError(Errc::BadCell, row.line_number, 3,
                       "area must be Ciencias or CienciasSociales, got '" + row.fields[2] + "'");
    j.area = *area;
    const auto category = parse_category(text::trim(row.fields[3]));
    if (!category)
      throw ParseError(Errc::BadCell, row.line_number, 4,
                       "ibnp_category must be A1, A2, B or C, got '" + row.fields[3] + "'");
    j.category = *category;
    const std::uint64_t air_ibnp = require_count(row, 4, "air_ibnp");
    for (std::size_t k = 0; k < std::size(kAllLibraries); ++k)
      if (require_flag(row, 5 + k)) j.memberships.insert(kAllLibraries[k]);
    if (with_h_sc && !text::trim(row.fields[10]).empty())
      j.h_sc = require_count(row, 10, "h_sc");

    if (registry.ibnp_totals.contains(j.journal_id))
      throw ParseError(Errc::DuplicateId, row.line_number, 1,
                       "duplicate journal_id '" + j.journal_id + "'");
    registry.ibnp_totals.emplace(j.journal_id, air_ibnp);
    registry.journals.push_back(std::move(j));
  }
  return registry;
}

std::vector<ArticleRecord> parse_citation_export(std::string_view content,
                                                 const std::string& journal_id) {
  const csv::Table table = csv::parse(content);
  const std::string header = join_header(table.header);
  if (header != kCitationExportHeader)
    throw ParseError(Errc::MalformedHeader, 1, 0,
                     "citation export header must be '" + std::string(kCitationExportHeader) +
                         "', got '" + header + "'");

  std::vector<ArticleRecord> records;
  records.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    ArticleRecord r;
    r.journal_id = journal_id;
    r.line = row.line_number;
    r.cites = require_count(row, 0, "cites");
    r.authors = row.fields[1];
    r.title = row.fields[2];
    if (!text::trim(row.fields[3]).empty()) {
      r.year = parse_int<int>(row.fields[3]);
      if (!r.year)
        throw ParseError(Errc::BadCell, row.line_number, 4,
                         "year must be an integer, got '" + row.fields[3] + "'");
    }
    r.publication = row.fields[4];
    r.publisher = row.fields[5];
    r.url = row.fields[6];
    records.push_back(std::move(r));
  }
  return records;
}

std::map<std::string, std::string> parse_alias_file(std::string_view content) {
  const csv::Table table = csv::parse(content);
  const std::string header = join_header(table.header);
  if (header != kAliasHeader)
    throw ParseError(Errc::MalformedHeader, 1, 0,
                     "alias header must be '" + std::string(kAliasHeader) + "', got '" + header +
                         "'");
  std::map<std::string, std::string> aliases;
  for (const auto& row : table.rows) {
    auto from = text::normalize_title(row.fields[0]);
    auto to = text::normalize_title(row.fields[1]);
    if (from.empty() || to.empty())
      throw ParseError(Errc::BadCell, row.line_number, from.empty() ? 1 : 2, "empty alias title");
    aliases[std::move(from)] = std::move(to);
  }
  return aliases;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

bool incomplete(const ArticleRecord& r, const YearWindow& window) {
  return text::trim(r.title).empty() || !r.year || !window.contains(*r.year);
}

}  // namespace

DedupOutcome deduplicate(std::vector<ArticleRecord> records, const DedupConfig& config) {
  for (const auto& r : records)
    if (r.journal_id != records.front().journal_id)
      throw Error(Errc::MixedJournal, "records from journals '" + records.front().journal_id +
                                          "' and '" + r.journal_id + "' passed to deduplicate");

  DedupOutcome out;
  IngestReport& report = out.report;
  report.rows_read = records.size();

  // Survivors are visited in line order so tie-breaks do not depend on input order.
  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return records[a].line < records[b].line; });

  // (iii) incomplete references
  std::vector<std::size_t> alive;
  for (std::size_t idx : order) {
    auto& r = records[idx];
    r.status = ArticleStatus::Kept;
    if (incomplete(r, config.window)) {
      r.status = ArticleStatus::DroppedIncomplete;
      report.decisions.push_back(
          DedupDecision{std::nullopt, {r.line}, DedupRule::IncompleteFields, std::nullopt});
    } else {
      alive.push_back(idx);
    }
  }

  // (i) similar titles, linked transitively
  std::vector<std::string> norm(records.size());
  std::vector<std::u32string> wide(records.size());
  for (std::size_t idx : alive) {
    norm[idx] = text::normalize_title(records[idx].title);
    wide[idx] = text::decode_utf8(norm[idx]);
  }
  DisjointSets sets(alive.size());
  std::vector<double> weakest(alive.size(), 1.0);
  std::vector<std::pair<std::size_t, double>> edges;
  for (std::size_t a = 0; a < alive.size(); ++a) {
    const auto& ta = wide[alive[a]];
    for (std::size_t b = a + 1; b < alive.size(); ++b) {
      const auto& tb = wide[alive[b]];
      const auto shorter = std::min(ta.size(), tb.size());
      const auto longer = std::max(ta.size(), tb.size());
      if (longer > 0 &&
          static_cast<double>(shorter) / static_cast<double>(longer) < config.title_threshold)
        continue;
      if (auto sim = text::similarity_at_least(ta, tb, config.title_threshold)) {
        sets.unite(a, b);
        edges.emplace_back(a, *sim);
      }
    }
  }
  for (const auto& [a, sim] : edges) {
    auto root = sets.find(a);
    weakest[root] = std::min(weakest[root], sim);
  }

  std::map<std::size_t, std::vector<std::size_t>> groups;  // root -> positions in `alive`
  for (std::size_t a = 0; a < alive.size(); ++a) groups[sets.find(a)].push_back(a);

  std::vector<std::size_t> survivors;
  for (const auto& [root, members] : groups) {
    std::size_t best = members.front();
    for (std::size_t m : members) {
      const auto& cand = records[alive[m]];
      const auto& cur = records[alive[best]];
      if (cand.cites > cur.cites || (cand.cites == cur.cites && cand.line < cur.line)) best = m;
    }
    survivors.push_back(alive[best]);
    if (members.size() == 1) continue;
    DedupDecision d{records[alive[best]].line, {}, DedupRule::SimilarTitle, weakest[root]};
    for (std::size_t m : members) {
      if (m == best) continue;
      records[alive[m]].status = ArticleStatus::DroppedDuplicate;
      d.dropped_lines.push_back(records[alive[m]].line);
    }
    report.decisions.push_back(std::move(d));
  }
  std::sort(survivors.begin(), survivors.end(),
            [&](std::size_t a, std::size_t b) { return records[a].line < records[b].line; });

  // (ii) confirmed aliases drop the source title in favour of its target
  if (!config.alias_map.empty()) {
    std::unordered_map<std::string, std::size_t> by_title;  // first survivor per title
    for (std::size_t idx : survivors) by_title.try_emplace(norm[idx], idx);
    for (std::size_t idx : survivors) {
      auto alias = config.alias_map.find(norm[idx]);
      if (alias == config.alias_map.end()) continue;
      auto target = by_title.find(alias->second);
      if (target == by_title.end() || target->second == idx) continue;
      if (records[target->second].status != ArticleStatus::Kept) continue;
      records[idx].status = ArticleStatus::DroppedDuplicate;
      report.decisions.push_back(DedupDecision{records[target->second].line,
                                               {records[idx].line},
                                               DedupRule::CrossLanguageSuspect,
                                               std::nullopt});
    }
    std::erase_if(survivors, [&](std::size_t idx) {
      return records[idx].status != ArticleStatus::Kept;
    });
  }

  // (ii) unconfirmed suspects: same (year, cites), no title tokens in common
  std::map<std::pair<int, std::uint64_t>, std::vector<std::size_t>> buckets;
  for (std::size_t idx : survivors) buckets[{*records[idx].year, records[idx].cites}].push_back(idx);
  std::vector<std::vector<std::string>> tokens(records.size());
  for (std::size_t idx : survivors) tokens[idx] = text::token_set(norm[idx]);
  for (const auto& [key, members] : buckets) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const auto& ta = tokens[members[a]];
        const auto& tb = tokens[members[b]];
        if (text::token_overlap(ta, tb) >= 0.3) continue;
        std::vector<std::string> common;
        std::set_intersection(ta.begin(), ta.end(), tb.begin(), tb.end(),
                              std::back_inserter(common));
        if (!common.empty()) continue;
        records[members[a]].status = ArticleStatus::NeedsReview;
        records[members[b]].status = ArticleStatus::NeedsReview;
        report.decisions.push_back(DedupDecision{records[members[a]].line,
                                                 {},
                                                 DedupRule::CrossLanguageSuspect,
                                                 std::nullopt});
      }
    }
  }

  for (const auto& r : records) {
    switch (r.status) {
      case ArticleStatus::Kept: ++report.rows_kept; break;
      case ArticleStatus::NeedsReview:
        ++report.rows_kept;
        ++report.rows_flagged_review;
        break;
      case ArticleStatus::DroppedIncomplete: ++report.rows_dropped_incomplete; break;
      case ArticleStatus::DroppedDuplicate: ++report.rows_dropped_duplicate; break;
    }
  }
  out.records = std::move(records);
  return out;
}

JournalCorpus build_corpus(const Registry& registry,
                           const std::map<std::string, std::vector<ArticleRecord>>& records,
                           YearWindow window) {
  JournalCorpus corpus;
  corpus.window = window;
  corpus.journals = registry.journals;
  corpus.ibnp_totals = registry.ibnp_totals;
  for (const auto& [id, list] : records) {
    if (!registry.ibnp_totals.contains(id))
      throw Error(Errc::UnknownJournal, "records given for unknown journal '" + id + "'");
    for (const auto& r : list)
      if (r.journal_id != id)
        throw Error(Errc::UnknownJournal, "record at line " + std::to_string(r.line) +
                                              " carries journal_id '" + r.journal_id +
                                              "' but was filed under '" + id + "'");
  }
  for (const auto& j : corpus.journals) {
    auto it = records.find(j.journal_id);
    if (it == records.end()) continue;
    corpus.articles.insert(corpus.articles.end(), it->second.begin(), it->second.end());
  }
  auto violations = validate_corpus(corpus);
  if (!violations.empty()) {
    std::string msg = "assembled corpus is invalid: " + violations.front();
    if (violations.size() > 1)
      msg += " (and " + std::to_string(violations.size() - 1) + " more)";
    throw Error(Errc::InvalidCorpus, msg);
  }
  return corpus;
}

}  // namespace citemetric
