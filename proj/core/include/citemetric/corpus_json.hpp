// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "citemetric/corpus.hpp"

namespace citemetric {

/// Corpus document: top-level keys `window`, `journals`, `articles`,
/// `ibnp_totals`. Keys are emitted in sorted order so output bytes depend
/// only on the corpus contents.
nlohmann::json corpus_to_json(const JournalCorpus& corpus);
JournalCorpus corpus_from_json(const nlohmann::json& doc);

/// Two-space indented JSON text with a trailing newline.
std::string dump_corpus(const JournalCorpus& corpus);

/// Throws Error(InvalidCorpus) on malformed JSON, missing keys or bad enum
/// strings. Does not run validate_corpus.
JournalCorpus load_corpus(std::string_view text);

}  // namespace citemetric
