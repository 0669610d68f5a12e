// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "citemetric/corpus.hpp"

namespace citemetric {
namespace {

JournalCorpus small_corpus() {
  JournalCorpus c;
  c.journals.push_back({"j1", "Colombia Médica", Area::Ciencias, IbnpCategory::A2,
                        {Library::Scopus, Library::GoogleScholar}, std::nullopt});
  c.journals.push_back({"j2", "Desarrollo y Sociedad", Area::CienciasSociales, IbnpCategory::A2,
                        {Library::GoogleScholar}, 4});
  c.ibnp_totals = {{"j1", 10}, {"j2", 5}};
  ArticleRecord a;
  a.journal_id = "j1";
  a.line = 2;
  a.title = "Efecto del clima";
  a.year = 2005;
  a.cites = 3;
  c.articles.push_back(a);
  a.line = 3;
  a.title = "Efecto del clima.";
  a.status = ArticleStatus::DroppedDuplicate;
  c.articles.push_back(a);
  a.journal_id = "j2";
  a.line = 2;
  a.title = "Mercados";
  a.status = ArticleStatus::NeedsReview;
  c.articles.push_back(a);
  return c;
}

TEST(Corpus, EnumStringsRoundTrip) {
  for (auto a : {Area::Ciencias, Area::CienciasSociales}) EXPECT_EQ(parse_area(to_string(a)), a);
  for (auto c : kAllCategories) EXPECT_EQ(parse_category(to_string(c)), c);
  for (auto l : kAllLibraries) EXPECT_EQ(parse_library(to_string(l)), l);
  for (auto s : {ArticleStatus::Kept, ArticleStatus::DroppedIncomplete, ArticleStatus::DroppedDuplicate,
                 ArticleStatus::NeedsReview})
    EXPECT_EQ(parse_status(to_string(s)), s);
  EXPECT_FALSE(parse_category("D").has_value());
}

TEST(Corpus, ValidCorpusHasNoIssues) { EXPECT_TRUE(validate_corpus(small_corpus()).empty()); }

TEST(Corpus, VisibleArticlesIncludeFlaggedButNotDropped) {
  const auto c = small_corpus();
  const auto v = c.visible_articles();
  ASSERT_EQ(v.at("j1").size(), 1u);
  EXPECT_EQ(v.at("j1").front()->line, 2u);
  EXPECT_EQ(v.at("j2").size(), 1u);
}

TEST(Corpus, ValidationCatchesBrokenInvariants) {
  auto c = small_corpus();
  c.journals.push_back(c.journals.front());
  EXPECT_FALSE(validate_corpus(c).empty());

  c = small_corpus();
  c.ibnp_totals.erase("j2");
  EXPECT_FALSE(validate_corpus(c).empty());

  c = small_corpus();
  c.articles[0].journal_id = "nope";
  EXPECT_FALSE(validate_corpus(c).empty());

  c = small_corpus();
  c.articles[0].year = 1990;
  EXPECT_FALSE(validate_corpus(c).empty());

  c = small_corpus();
  c.articles[0].year.reset();
  c.articles[0].status = ArticleStatus::DroppedIncomplete;
  EXPECT_TRUE(validate_corpus(c).empty());

  c = small_corpus();
  c.window = {2008, 2003};
  EXPECT_FALSE(validate_corpus(c).empty());
}

TEST(Corpus, FilterByAreaKeepsOnlyThatArea) {
  const auto f = filter_by_area(small_corpus(), Area::CienciasSociales);
  ASSERT_EQ(f.journals.size(), 1u);
  EXPECT_EQ(f.journals[0].journal_id, "j2");
  EXPECT_EQ(f.articles.size(), 1u);
  EXPECT_EQ(f.ibnp_totals.size(), 1u);
  EXPECT_TRUE(validate_corpus(f).empty());
}

TEST(YearWindowTest, ContainsIsInclusive) {
  YearWindow w;
  EXPECT_TRUE(w.contains(2003));
  EXPECT_TRUE(w.contains(2007));
  EXPECT_FALSE(w.contains(2008));
  EXPECT_FALSE(w.contains(2002));
}

}  // namespace
}  // namespace citemetric
