// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace citemetric::text {

/// Canonical form used for duplicate detection: lowercase, diacritics
/// removed (precomposed Latin letters are decomposed and combining marks
/// U+0300..U+036F dropped), punctuation replaced by spaces, whitespace
/// collapsed and trimmed. Idempotent. Invalid UTF-8 bytes are dropped.
std::string normalize_title(std::string_view title);

/// Decode UTF-8 into code points; malformed sequences are skipped.
std::u32string decode_utf8(std::string_view s);

std::string trim(std::string_view s);

/// Levenshtein distance over code points.
std::size_t levenshtein(std::u32string_view a, std::u32string_view b);

/// Levenshtein distance if it is <= max_distance, otherwise nullopt.
/// Runs in O(max_distance * length) using a diagonal band.
std::optional<std::size_t> levenshtein_bounded(std::u32string_view a, std::u32string_view b,
                                               std::size_t max_distance);

/// 1 - distance / max(len a, len b) over code points; 1.0 for two empty strings.
double similarity(std::u32string_view a, std::u32string_view b);

/// Similarity if it is >= threshold, otherwise nullopt. Cheap for dissimilar pairs.
std::optional<double> similarity_at_least(std::u32string_view a, std::u32string_view b,
                                          double threshold);

/// Whitespace-separated tokens of an already normalized title, sorted and unique.
std::vector<std::string> token_set(std::string_view normalized);

/// |A ∩ B| / |A ∪ B| for sorted unique token sets; 0 when both are empty.
double token_overlap(const std::vector<std::string>& a, const std::vector<std::string>& b);

}  // namespace citemetric::text
