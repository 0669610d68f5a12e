// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "citemetric/corpus_json.hpp"
#include "citemetric/error.hpp"
#include "citemetric/ingest.hpp"
#include "test_support.hpp"

namespace citemetric {
namespace {

JournalCorpus sample() {
  JournalCorpus c;
  c.journals.push_back({"j1", "Colombia Médica", Area::Ciencias, IbnpCategory::A2,
                        {Library::Scopus, Library::GoogleScholar}, 5});
  c.ibnp_totals["j1"] = 12;
  ArticleRecord a;
  a.journal_id = "j1";
  a.line = 2;
  a.title = "Título \"con\" comillas";
  a.year = 2004;
  a.cites = 7;
  a.authors = "Pérez J";
  c.articles.push_back(a);
  a.line = 3;
  a.year.reset();
  a.status = ArticleStatus::DroppedIncomplete;
  c.articles.push_back(a);
  return c;
}

TEST(CorpusJson, RoundTrip) {
  const auto c = sample();
  const auto back = load_corpus(dump_corpus(c));
  EXPECT_EQ(back.journals, c.journals);
  EXPECT_EQ(back.articles, c.articles);
  EXPECT_EQ(back.ibnp_totals, c.ibnp_totals);
  EXPECT_EQ(back.window, c.window);
}

TEST(CorpusJson, TopLevelKeysAndStatusStrings) {
  const auto doc = corpus_to_json(sample());
  for (const char* key : {"window", "journals", "articles", "ibnp_totals"}) EXPECT_TRUE(doc.contains(key));
  EXPECT_EQ(doc["articles"][1]["status"], "DroppedIncomplete");
  EXPECT_TRUE(doc["articles"][1]["year"].is_null());
  EXPECT_EQ(doc["ibnp_totals"]["j1"], 12);
}

TEST(CorpusJson, DumpIsByteStable) {
  EXPECT_EQ(dump_corpus(sample()), dump_corpus(load_corpus(dump_corpus(sample()))));
}

TEST(CorpusJson, MalformedInputIsInvalidCorpus) {
  for (const char* bad : {"{", "[]", "{\"window\":{}}",
                          R"({"window":{"start_year":2003,"end_year":2007},"journals":[{"journal_id":"x","title":"t","area":"Mars","category":"A1","memberships":[]}],"articles":[],"ibnp_totals":{}})"}) {
    try {
      load_corpus(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::InvalidCorpus) << bad;
    }
  }
}

TEST(CorpusJson, FixtureRoundTripsByteForByte) {
  const std::string text = testing::slurp(testing::ciencias_dir() / "corpus.json");
  const auto c = load_corpus(text);
  EXPECT_TRUE(validate_corpus(c).empty());
  EXPECT_EQ(dump_corpus(c), text);
}

}  // namespace
}  // namespace citemetric
