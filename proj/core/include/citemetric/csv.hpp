// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace citemetric::csv {

struct RawRow {
  std::size_t line_number = 0;  // physical line where the row starts; header is line 1
  std::vector<std::string> fields;
};

struct Table {
  std::vector<std::string> header;
  std::vector<RawRow> rows;
};

/// RFC-4180 reader. Accepts LF or CRLF, a leading UTF-8 BOM and a missing
/// final newline; blank lines are skipped. Every row must have as many cells
/// as the header (ParseError BadCell otherwise). Input without a header row
/// raises MalformedHeader.
Table parse(std::string_view content);

/// Quote a cell if it contains a comma, quote, CR or LF.
std::string escape(std::string_view cell);

/// Join cells into one LF-terminated record.
std::string format_row(const std::vector<std::string>& cells);

}  // namespace citemetric::csv
