// SPDX-License-Identifier: Apache-2.0
#include "citemetric/csv.hpp"

#include "citemetric/error.hpp"

namespace citemetric::csv {

namespace {

struct Record {
  std::size_t line = 0;
  std::vector<std::string> cells;
  bool blank = false;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {
    if (text_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
  }

  bool done() const { return pos_ >= text_.size(); }

  Record next() {
    Record rec;
    rec.line = line_;
    std::string cell;
    bool any_content = false;
    while (true) {
      if (done()) {
        rec.cells.push_back(std::move(cell));
        break;
      }
      char c = text_[pos_];
      if (c == '"' && cell.empty() && !in_cell_) {
        any_content = true;
        read_quoted(cell, rec.line);
        in_cell_ = true;
        continue;
      }
      if (c == ',') {
        any_content = true;
        rec.cells.push_back(std::move(cell));
        cell.clear();
        in_cell_ = false;
        quoted_ = false;
        ++pos_;
        continue;
      }
      if (c == '\r' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '\n') ++pos_;
      if (c == '\n' || c == '\r') {
        ++pos_;
        ++line_;
        rec.cells.push_back(std::move(cell));
        break;
      }
      if (in_cell_ && quoted_) {
        throw ParseError(Errc::BadCell, rec.line, rec.cells.size() + 1,
                         "unexpected character after closing quote");
      }
      cell.push_back(c);
      in_cell_ = true;
      any_content = true;
      ++pos_;
    }
    in_cell_ = false;
    quoted_ = false;
    rec.blank = !any_content && rec.cells.size() == 1 && rec.cells[0].empty();
    return rec;
  }

 private:
  void read_quoted(std::string& cell, std::size_t start_line) {
    ++pos_;  // opening quote
    quoted_ = true;
    while (true) {
      if (done()) throw ParseError(Errc::BadCell, start_line, 0, "unterminated quoted cell");
      char c = text_[pos_];
      if (c == '"') {
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '"') {
          cell.push_back('"');
          pos_ += 2;
          continue;
        }
        ++pos_;
        return;
      }
      if (c == '\n') ++line_;
      cell.push_back(c);
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  bool in_cell_ = false;
  bool quoted_ = false;
};

}  // namespace

Table parse(std::string_view content) {
  Reader reader(content);
  Table table;
  bool have_header = false;
  while (!reader.done()) {
    Record rec = reader.next();
    if (rec.blank) continue;
    if (!have_header) {
      table.header = std::move(rec.cells);
      have_header = true;
      continue;
    }
    if (rec.cells.size() != table.header.size()) {
      throw ParseError(Errc::BadCell, rec.line, 0,
                       "expected " + std::to_string(table.header.size()) + " cells, found " +
                           std::to_string(rec.cells.size()));
    }
    table.rows.push_back(RawRow{rec.line, std::move(rec.cells)});
  }
  if (!have_header) throw ParseError(Errc::MalformedHeader, 1, 0, "missing header row");
  return table;
}

std::string escape(std::string_view cell) {
  if (cell.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(cell);
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string format_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out.push_back(',');
    out += escape(cells[i]);
  }
  out.push_back('\n');
  return out;
}

}  // namespace citemetric::csv
