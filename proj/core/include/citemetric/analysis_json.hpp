// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "citemetric/analysis.hpp"

namespace citemetric {

// Each document carries a `conventions` object naming the log transforms
// and post-hoc procedure. Non-finite reals serialize as null.

nlohmann::json to_json(const GroupSummary& summary);
nlohmann::json to_json(const ComparisonTable& table);
nlohmann::json to_json(const CorrelationMatrix& matrix);
nlohmann::json to_json(const CitationFactorAnalysis& analysis);
nlohmann::json to_json(const CitationRegression& regression);

/// Two-space indented text with a trailing newline.
std::string dump_json(const nlohmann::json& doc);

}  // namespace citemetric
