// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "citemetric/classify.hpp"
#include "citemetric/error.hpp"
#include "test_support.hpp"

namespace citemetric {
namespace {

IndicatorSet journal(std::string id, std::string title, std::uint64_t h, std::optional<double> cpn,
                     IbnpCategory cat = IbnpCategory::B) {
  IndicatorSet s;
  s.journal_id = std::move(id);
  s.title = std::move(title);
  s.h = h;
  s.cpn = cpn;
  s.category = cat;
  return s;
}

TEST(RankJournals, HThenCpnThenTitle) {
  const std::vector<IndicatorSet> sets{journal("x", "ORINOQUIA", 4, 1.41), journal("y", "ACTA BIOLÓGICA", 4, 3.98),
                                       journal("z", "ZOOLOGÍA", 7, 0.2), journal("w", "AGRONOMÍA", 4, 1.41)};
  const auto rows = rank_journals(sets);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].journal_id, "z");
  EXPECT_EQ(rows[1].journal_id, "y");
  EXPECT_EQ(rows[2].journal_id, "w");
  EXPECT_EQ(rows[3].journal_id, "x");
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(rows[i].rank, i + 1);
}

TEST(RankJournals, MissingCpnIsAnError) {
  const std::vector<IndicatorSet> sets{journal("x", "A", 4, 1.0), journal("y", "B", 2, std::nullopt)};
  try {
    rank_journals(sets);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::MissingCpn);
    EXPECT_NE(std::string(e.what()).find("y"), std::string::npos);
  }
}

TEST(QuartileBoundsTest, FixedCuts) {
  const auto b = QuartileBounds::fixed();
  EXPECT_EQ(b.quartile_of(10), 1);
  EXPECT_EQ(b.quartile_of(4), 1);
  EXPECT_EQ(b.quartile_of(3), 2);
  EXPECT_EQ(b.quartile_of(2), 3);
  EXPECT_EQ(b.quartile_of(1), 4);
  EXPECT_EQ(b.quartile_of(0), 4);
}

TEST(QuartileBoundsTest, EmpiricalCuts) {
  const std::vector<std::uint64_t> flat(8, 5);
  const auto all_same = QuartileBounds::empirical(flat);
  EXPECT_EQ(all_same.quartile_of(5), 1);

  const std::vector<std::uint64_t> ranked{8, 7, 6, 5, 4, 3, 2, 1};
  const auto b = QuartileBounds::empirical(ranked);
  std::vector<int> q;
  for (auto h : ranked) q.push_back(b.quartile_of(h));
  EXPECT_EQ(q, (std::vector<int>{1, 1, 2, 2, 3, 3, 4, 4}));
  EXPECT_EQ(QuartileBounds::empirical({}).cuts, (std::array<std::uint64_t, 3>{0, 0, 0}));
}

TEST(QuartileProperty, MonotoneInRank) {
  testing::Rng rng(4);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<IndicatorSet> sets;
    const std::size_t n = 1 + rng() % 60;
    for (std::size_t i = 0; i < n; ++i)
      sets.push_back(journal("j" + std::to_string(i), testing::random_title(rng), rng() % 15,
                             static_cast<double>(rng() % 1000) / 100.0));
    for (QuartileMode mode : {QuartileMode::Empirical, QuartileMode::Fixed}) {
      const auto rows = classify(sets, mode);
      ASSERT_EQ(rows.size(), n);
      for (std::size_t i = 0; i < n; ++i) {
        ASSERT_GE(rows[i].quartile, 1);
        ASSERT_LE(rows[i].quartile, 4);
        if (i > 0) {
          ASSERT_LE(rows[i - 1].quartile, rows[i].quartile);
          ASSERT_GE(rows[i - 1].h, rows[i].h);
        }
        // equal h always lands in the same quartile
        if (i > 0 && rows[i - 1].h == rows[i].h) {
          ASSERT_EQ(rows[i - 1].quartile, rows[i].quartile);
        }
      }
      if (mode == QuartileMode::Empirical) {
        ASSERT_EQ(rows[0].quartile, 1);
      }
    }
  }
}

TEST(EmitReport, EmptyInputIsHeaderOnly) {
  EXPECT_EQ(emit_report({}, ReportFormat::Csv), std::string(kReportCsvHeader) + "\n");
  EXPECT_EQ(emit_report({}, ReportFormat::Json), "[]\n");
  EXPECT_EQ(emit_report({}, ReportFormat::Markdown),
            "| rank | title | h | category | cpn | quartile |\n|---:|---|---:|---|---:|---:|\n");
}

TEST(EmitReport, FormatsAndTopFilter) {
  const std::vector<IndicatorSet> sets{journal("a", "COLOMBIA MÉDICA", 10, 10.349, IbnpCategory::A2),
                                       journal("b", "REVISTA, \"X\"", 3, 0.5), journal("c", "OTRA", 1, 0.004)};
  const auto rows = classify(sets, QuartileMode::Fixed);
  EXPECT_EQ(emit_report(rows, ReportFormat::Csv),
            "rank,title,h,category,cpn,quartile\n"
            "1,COLOMBIA MÉDICA,10,A2,10.35,1\n"
            "2,\"REVISTA, \"\"X\"\"\",3,B,0.50,2\n"
            "3,OTRA,1,B,0.00,4\n");
  EXPECT_EQ(emit_report(rows, ReportFormat::Markdown, 2),
            "| rank | title | h | category | cpn | quartile |\n|---:|---|---:|---|---:|---:|\n"
            "| 1 | COLOMBIA MÉDICA | 10 | A2 | 10.35 | 1 |\n"
            "| 2 | REVISTA, \"X\" | 3 | B | 0.50 | 2 |\n");
  const auto doc = nlohmann::json::parse(emit_report(rows, ReportFormat::Json, 1));
  ASSERT_EQ(doc.size(), 1u);
  EXPECT_EQ(doc[0]["title"], "COLOMBIA MÉDICA");
  EXPECT_DOUBLE_EQ(doc[0]["cpn"].get<double>(), 10.349);
  EXPECT_EQ(doc[0]["quartile"], 1);
}

TEST(EmitReport, Deterministic) {
  testing::Rng rng(6);
  std::vector<IndicatorSet> sets;
  for (int i = 0; i < 40; ++i)
    sets.push_back(journal("j" + std::to_string(i), testing::random_title(rng), rng() % 9, (rng() % 500) / 100.0));
  const auto a = classify(sets, QuartileMode::Empirical);
  std::vector<IndicatorSet> reversed(sets.rbegin(), sets.rend());
  const auto b = classify(reversed, QuartileMode::Empirical);
  for (ReportFormat f : {ReportFormat::Csv, ReportFormat::Json, ReportFormat::Markdown})
    EXPECT_EQ(emit_report(a, f), emit_report(b, f));
}

TEST(ParseReportFormat, Names) {
  EXPECT_EQ(parse_report_format("md"), ReportFormat::Markdown);
  EXPECT_EQ(parse_report_format("markdown"), ReportFormat::Markdown);
  EXPECT_EQ(parse_report_format("csv"), ReportFormat::Csv);
  EXPECT_EQ(parse_report_format("json"), ReportFormat::Json);
  EXPECT_FALSE(parse_report_format("xlsx").has_value());
}

}  // namespace
}  // namespace citemetric
