// SPDX-License-Identifier: Apache-2.0
#include "citemetric/text.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string_view>

namespace citemetric::text {

namespace {

// Base letter for U+00C0..U+017F, '.' where the code point has no canonical
// decomposition into a Latin letter plus combining marks.
constexpr std::string_view kLatinBase =
    // U+00C0..U+00FF
    "aaaaaa.ceeeeiiii.nooooo..uuuuy.."
    "aaaaaa.ceeeeiiii.nooooo..uuuuy.y"
    // U+0100..U+017F
    "aaaaaaccccccccdd..eeeeeeeeeegggggggghh..iiiiiiiii...jjkk.llllll...."
    "nnnnnn...oooooo..rrrrrrsssssssstttt..uuuuuuuuuuuuwwyyyzzzzzz.";
static_assert(kLatinBase.size() == 0x180 - 0xC0);

char32_t lower_undecomposed(char32_t cp) {
  switch (cp) {
    case 0xC6: case 0xD0: case 0xD8: case 0xDE: return cp + 0x20;
    case 0x110: case 0x126: case 0x132: case 0x13F:
    case 0x141: case 0x14A: case 0x152: case 0x166: return cp + 1;
    default: return cp;
  }
}

bool is_separator(char32_t cp) {
  if (cp < 0x80) {
    if (cp <= 0x20 || cp == 0x7F) return true;
    return !((cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z'));
  }
  return (cp >= 0x80 && cp <= 0xBF) || cp == 0xD7 || cp == 0xF7 ||
         (cp >= 0x2000 && cp <= 0x206F) || cp == 0x3000 || cp == 0xFEFF;
}

bool is_combining(char32_t cp) { return cp >= 0x300 && cp <= 0x36F; }

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

}  // namespace

std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    std::size_t len = 0;
    char32_t cp = 0;
    if (b0 < 0x80) {
      len = 1;
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      ++i;
      continue;
    }
    if (i + len > s.size()) break;
    bool ok = true;
    for (std::size_t k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    if (!ok) {
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto ws = " \t\r\n\f\v";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return std::string(s.substr(first, last - first + 1));
}

std::string normalize_title(std::string_view title) {
  std::string out;
  out.reserve(title.size());
  bool pending_space = false;
  for (char32_t cp : decode_utf8(title)) {
    if (is_combining(cp)) continue;
    if (is_separator(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (cp >= 'A' && cp <= 'Z') {
      cp = cp - 'A' + 'a';
    } else if (cp >= 0xC0 && cp < 0x180) {
      const char base = kLatinBase[cp - 0xC0];
      cp = base != '.' ? static_cast<char32_t>(base) : lower_undecomposed(cp);
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    append_utf8(out, cp);
  }
  return out;
}

std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

std::optional<std::size_t> levenshtein_bounded(std::u32string_view a, std::u32string_view b,
                                               std::size_t max_distance) {
  if (a.size() > b.size()) std::swap(a, b);
  if (b.size() - a.size() > max_distance) return std::nullopt;
  const std::size_t inf = std::numeric_limits<std::size_t>::max() / 2;
  const std::size_t k = max_distance;
  std::vector<std::size_t> prev(b.size() + 1, inf), cur(b.size() + 1, inf);
  for (std::size_t j = 0; j <= std::min(b.size(), k); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    const std::size_t lo = i > k ? i - k : 0;
    const std::size_t hi = std::min(b.size(), i + k);
    if (lo > 0) cur[lo - 1] = inf;
    if (hi + 1 <= b.size()) cur[hi + 1] = inf;
    std::size_t row_min = inf;
    if (lo == 0) {
      cur[0] = i;
      row_min = i;
    }
    for (std::size_t j = std::max<std::size_t>(lo, 1); j <= hi; ++j) {
      std::size_t v = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      v = std::min(v, prev[j] + 1);
      v = std::min(v, cur[j - 1] + 1);
      cur[j] = v;
      row_min = std::min(row_min, v);
    }
    if (row_min > k) return std::nullopt;
    std::swap(prev, cur);
  }
  const std::size_t d = prev[b.size()];
  if (d > k) return std::nullopt;
  return d;
}

double similarity(std::u32string_view a, std::u32string_view b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(levenshtein(a, b)) / static_cast<double>(longest);
}

std::optional<double> similarity_at_least(std::u32string_view a, std::u32string_view b,
                                          double threshold) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return threshold <= 1.0 ? std::optional<double>(1.0) : std::nullopt;
  // One unit of slack so floating error in the bound can only admit extra
  // candidates; the exact comparison below decides.
  const auto budget =
      static_cast<std::size_t>(std::floor((1.0 - threshold) * static_cast<double>(longest))) + 1;
  const auto d = levenshtein_bounded(a, b, budget);
  if (!d) return std::nullopt;
  const double sim = 1.0 - static_cast<double>(*d) / static_cast<double>(longest);
  if (sim >= threshold) return sim;
  return std::nullopt;
}

std::vector<std::string> token_set(std::string_view normalized) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < normalized.size()) {
    while (i < normalized.size() && normalized[i] == ' ') ++i;
    std::size_t j = i;
    while (j < normalized.size() && normalized[j] != ' ') ++j;
    if (j > i) tokens.emplace_back(normalized.substr(i, j - i));
    i = j;
  }
  std::sort(tokens.begin(), tokens.end());
  tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
  return tokens;
}

double token_overlap(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::vector<std::string> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  const std::size_t uni = a.size() + b.size() - common.size();
  return static_cast<double>(common.size()) / static_cast<double>(uni);
}

}  // namespace citemetric::text
