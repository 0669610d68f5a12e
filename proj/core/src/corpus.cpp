// SPDX-License-Identifier: Apache-2.0
#include "citemetric/corpus.hpp"

#include <algorithm>
#include <unordered_set>

namespace citemetric {

std::string_view to_string(Area area) noexcept {
  switch (area) {
    case Area::Ciencias: return "Ciencias";
    case Area::CienciasSociales: return "CienciasSociales";
  }
  return "";
}

std::string_view to_string(IbnpCategory category) noexcept {
  switch (category) {
    case IbnpCategory::A1: return "A1";
    case IbnpCategory::A2: return "A2";
    case IbnpCategory::B: return "B";
    case IbnpCategory::C: return "C";
  }
  return "";
}

std::string_view to_string(Library library) noexcept {
  switch (library) {
    case Library::WoK: return "WoK";
    case Library::Scopus: return "Scopus";
    case Library::Redalyc: return "Redalyc";
    case Library::Scielo: return "Scielo";
    case Library::GoogleScholar: return "GoogleScholar";
  }
  return "";
}

std::string_view to_string(ArticleStatus status) noexcept {
  switch (status) {
    case ArticleStatus::Kept: return "Kept";
    case ArticleStatus::DroppedIncomplete: return "DroppedIncomplete";
    case ArticleStatus::DroppedDuplicate: return "DroppedDuplicate";
    case ArticleStatus::NeedsReview: return "NeedsReview";
  }
  return "";
}

std::optional<Area> parse_area(std::string_view text) noexcept {
  if (text == "Ciencias") return Area::Ciencias;
  if (text == "CienciasSociales") return Area::CienciasSociales;
  return std::nullopt;
}

std::optional<IbnpCategory> parse_category(std::string_view text) noexcept {
  for (auto c : kAllCategories)
    if (text == to_string(c)) return c;
  return std::nullopt;
}

std::optional<Library> parse_library(std::string_view text) noexcept {
  for (auto l : kAllLibraries)
    if (text == to_string(l)) return l;
  return std::nullopt;
}

std::optional<ArticleStatus> parse_status(std::string_view text) noexcept {
  for (auto s : {ArticleStatus::Kept, ArticleStatus::DroppedIncomplete,
                 ArticleStatus::DroppedDuplicate, ArticleStatus::NeedsReview})
    if (text == to_string(s)) return s;
  return std::nullopt;
}

const JournalRecord* JournalCorpus::find_journal(std::string_view journal_id) const {
  auto it = std::find_if(journals.begin(), journals.end(),
                         [&](const JournalRecord& j) { return j.journal_id == journal_id; });
  return it == journals.end() ? nullptr : &*it;
}

std::map<std::string, std::vector<const ArticleRecord*>> JournalCorpus::visible_articles() const {
  std::map<std::string, std::vector<const ArticleRecord*>> out;
  for (const auto& j : journals) out[j.journal_id];
  for (const auto& a : articles)
    if (is_visible(a.status)) out[a.journal_id].push_back(&a);
  return out;
}

namespace {

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  });
}

}  // namespace

std::vector<std::string> validate_corpus(const JournalCorpus& corpus) {
  std::vector<std::string> violations;
  const auto& w = corpus.window;
  if (w.start_year > w.end_year) {
    violations.push_back("window: start_year " + std::to_string(w.start_year) +
                         " exceeds end_year " + std::to_string(w.end_year));
  }

  std::unordered_set<std::string> ids;
  for (std::size_t i = 0; i < corpus.journals.size(); ++i) {
    const auto& j = corpus.journals[i];
    const std::string where = "journal[" + std::to_string(i) + "] '" + j.journal_id + "'";
    if (j.journal_id.empty()) violations.push_back(where + ": empty journal_id");
    if (!ids.insert(j.journal_id).second)
      violations.push_back(where + ": duplicate journal_id '" + j.journal_id + "'");
    if (blank(j.title)) violations.push_back(where + ": title empty after trimming");
    if (!corpus.ibnp_totals.contains(j.journal_id))
      violations.push_back(where + ": missing ibnp_totals entry");
  }
  for (const auto& [id, total] : corpus.ibnp_totals) {
    if (!ids.contains(id))
      violations.push_back("ibnp_totals '" + id + "': no such journal");
  }

  for (std::size_t i = 0; i < corpus.articles.size(); ++i) {
    const auto& a = corpus.articles[i];
    const std::string where = "article[" + std::to_string(i) + "] (journal '" + a.journal_id +
                              "', line " + std::to_string(a.line) + ")";
    if (!ids.contains(a.journal_id))
      violations.push_back(where + ": unknown journal_id '" + a.journal_id + "'");
    if (a.status == ArticleStatus::Kept || a.status == ArticleStatus::NeedsReview) {
      if (blank(a.title)) violations.push_back(where + ": visible record with empty title");
      if (!a.year)
        violations.push_back(where + ": visible record with missing year");
      else if (!w.contains(*a.year))
        violations.push_back(where + ": visible record with year " + std::to_string(*a.year) +
                             " outside window");
    }
  }
  return violations;
}

JournalCorpus filter_by_area(const JournalCorpus& corpus, Area area) {
  JournalCorpus out;
  out.window = corpus.window;
  std::unordered_set<std::string> keep;
  for (const auto& j : corpus.journals) {
    if (j.area != area) continue;
    keep.insert(j.journal_id);
    out.journals.push_back(j);
  }
  for (const auto& a : corpus.articles)
    if (keep.contains(a.journal_id)) out.articles.push_back(a);
  for (const auto& [id, total] : corpus.ibnp_totals)
    if (keep.contains(id)) out.ibnp_totals.emplace(id, total);
  return out;
}

}  // namespace citemetric
