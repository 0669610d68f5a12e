// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "citemetric/text.hpp"
#include "test_support.hpp"

namespace citemetric {
namespace {

using text::decode_utf8;

TEST(NormalizeTitle, LowercasesStripsAccentsAndPunctuation) {
  EXPECT_EQ(text::normalize_title("  Efecto del CLIMA, en el Café!  "), "efecto del clima en el cafe");
  EXPECT_EQ(text::normalize_title("BIOMÉDICA"), "biomedica");
  EXPECT_EQ(text::normalize_title("Niño-Ñandú"), "nino nandu");
}

TEST(NormalizeTitle, DropsCombiningMarks) {
  // "e" followed by U+0301 COMBINING ACUTE ACCENT.
  EXPECT_EQ(text::normalize_title("Me\xCC\x81" "dica"), "medica");
}

TEST(NormalizeTitle, IsIdempotent) {
  testing::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const std::string t = testing::random_title(rng) + " -- " + testing::random_title(rng) + "?";
    const std::string once = text::normalize_title(t);
    EXPECT_EQ(text::normalize_title(once), once);
  }
}

TEST(NormalizeTitle, TrailingPeriodDoesNotMatter) {
  EXPECT_EQ(text::normalize_title("Efecto del clima"), text::normalize_title("Efecto del clima."));
}

TEST(Levenshtein, KnownDistances) {
  EXPECT_EQ(text::levenshtein(U"kitten", U"sitting"), 3u);
  EXPECT_EQ(text::levenshtein(U"", U"abc"), 3u);
  EXPECT_EQ(text::levenshtein(U"same", U"same"), 0u);
}

TEST(Levenshtein, BoundedMatchesFullWithinBand) {
  testing::Rng rng(5);
  std::uniform_int_distribution<int> letter(0, 3), len(0, 14), bound(0, 10);
  for (int iter = 0; iter < 2000; ++iter) {
    std::u32string a, b;
    for (int i = 0, n = len(rng); i < n; ++i) a.push_back(U'a' + letter(rng));
    for (int i = 0, n = len(rng); i < n; ++i) b.push_back(U'a' + letter(rng));
    const std::size_t full = testing::naive_levenshtein(a, b);
    ASSERT_EQ(text::levenshtein(a, b), full);
    const auto k = static_cast<std::size_t>(bound(rng));
    const auto got = text::levenshtein_bounded(a, b, k);
    if (full <= k) {
      ASSERT_TRUE(got.has_value());
      EXPECT_EQ(*got, full);
    } else {
      EXPECT_FALSE(got.has_value());
    }
  }
}

TEST(Similarity, ThresholdAgreesWithExactSimilarity) {
  testing::Rng rng(9);
  std::uniform_int_distribution<int> letter(0, 2), len(1, 30);
  for (int iter = 0; iter < 2000; ++iter) {
    std::u32string a, b;
    for (int i = 0, n = len(rng); i < n; ++i) a.push_back(U'x' + letter(rng));
    b = a;
    for (int e = 0; e < letter(rng); ++e)
      if (!b.empty()) b[static_cast<std::size_t>(len(rng)) % b.size()] = U'q';
    const double s = text::similarity(a, b);
    for (double t : {0.5, 0.8, 0.92, 1.0}) {
      const auto got = text::similarity_at_least(a, b, t);
      EXPECT_EQ(got.has_value(), s >= t);
      if (got) {
        EXPECT_DOUBLE_EQ(*got, s);
      }
    }
  }
}

TEST(Similarity, EmptyStringsAreIdentical) { EXPECT_EQ(text::similarity(U"", U""), 1.0); }

TEST(Tokens, SetAndOverlap) {
  const auto a = text::token_set("efecto del clima en cafe");
  const auto b = text::token_set("climate effect on coffee");
  EXPECT_EQ(text::token_overlap(a, b), 0.0);
  EXPECT_EQ(text::token_overlap(a, a), 1.0);
  EXPECT_EQ(text::token_set("b a b"), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(text::token_overlap({}, {}), 0.0);
}

TEST(Utf8, DecodesMultibyteAndSkipsInvalid) {
  EXPECT_EQ(decode_utf8("Añ"), U"Añ");
  EXPECT_EQ(decode_utf8("a\xFF" "b"), U"ab");
}

}  // namespace
}  // namespace citemetric
