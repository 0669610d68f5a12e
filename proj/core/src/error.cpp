// SPDX-License-Identifier: Apache-2.0
#include "citemetric/error.hpp"

namespace citemetric {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::BadCell: return "BadCell";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::MixedJournal: return "MixedJournal";
    case Errc::UnknownJournal: return "UnknownJournal";
    case Errc::InvalidCorpus: return "InvalidCorpus";
    case Errc::DomainError: return "DomainError";
    case Errc::EmptyArea: return "EmptyArea";
    case Errc::ZeroAreaMean: return "ZeroAreaMean";
    case Errc::EmptyGroup: return "EmptyGroup";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::TooFewGroups: return "TooFewGroups";
    case Errc::AllTied: return "AllTied";
    case Errc::ConstantColumn: return "ConstantColumn";
    case Errc::NonConvergence: return "NonConvergence";
    case Errc::NoGroups: return "NoGroups";
    case Errc::TooFewJournals: return "TooFewJournals";
    case Errc::MissingCpn: return "MissingCpn";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

namespace {

std::string located(std::size_t line, std::size_t column, const std::string& reason) {
  std::string out = "line " + std::to_string(line);
  if (column > 0) out += ", column " + std::to_string(column);
  out += ": " + reason;
  return out;
}

}  // namespace

ParseError::ParseError(Errc code, std::size_t line, std::size_t column, const std::string& reason)
    : Error(code, located(line, column, reason)), line_(line), column_(column) {}

}  // namespace citemetric
