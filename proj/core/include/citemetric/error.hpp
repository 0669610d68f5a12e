// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace citemetric {

enum class Errc {
  MalformedHeader,
  BadCell,
  DuplicateId,
  MixedJournal,
  UnknownJournal,
  InvalidCorpus,
  DomainError,
  EmptyArea,
  ZeroAreaMean,
  EmptyGroup,
  LengthMismatch,
  DegenerateInput,
  RankDeficient,
  TooFewGroups,
  AllTied,
  ConstantColumn,
  NonConvergence,
  NoGroups,
  TooFewJournals,
  MissingCpn,
  Io,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library. `what()` carries a human-readable
/// diagnostic; `code()` the machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parse failure located in a file. Line numbers are 1-based physical rows
/// including the header; column is 1-based or 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t line, std::size_t column, const std::string& reason);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace citemetric
