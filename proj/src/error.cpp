#include "evidentia/error.hpp"

#include <fmt/format.h>

namespace evidentia {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::EmptyFrame: return "EmptyFrame";
    case Errc::FrameTooLarge: return "FrameTooLarge";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::EmptyFocalSet: return "EmptyFocalSet";
    case Errc::BpaOutOfRange: return "BpaOutOfRange";
    case Errc::InvalidMass: return "InvalidMass";
    case Errc::FrameMismatch: return "FrameMismatch";
    case Errc::TotalConflict: return "TotalConflict";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::DuplicateRuleId: return "DuplicateRuleId";
    case Errc::UnknownDisease: return "UnknownDisease";
    case Errc::EmptyDiseaseSet: return "EmptyDiseaseSet";
    case Errc::UnknownRuleId: return "UnknownRuleId";
    case Errc::DuplicateSymptom: return "DuplicateSymptom";
    case Errc::NotAsserted: return "NotAsserted";
    case Errc::UnknownSession: return "UnknownSession";
    case Errc::IoError: return "IoError";
    case Errc::StoreError: return "StoreError";
    case Errc::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

TextPosition position_of(std::string_view text, std::size_t byte_offset) {
  TextPosition pos;
  const std::size_t end = byte_offset < text.size() ? byte_offset : text.size();
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(fmt::format("{}: {}", to_string(code), message)),
      code_(code),
      detail_(message) {}

Error::Error(Errc code, const std::string& message, TextPosition where)
    : std::runtime_error(fmt::format("{} at line {}, column {}: {}", to_string(code),
                                     where.line, where.column, message)),
      code_(code),
      detail_(message),
      where_(where) {}

}  // namespace evidentia
