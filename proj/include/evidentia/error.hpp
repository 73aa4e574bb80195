#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace evidentia {

enum class Errc {
  DuplicateLabel,
  EmptyFrame,
  FrameTooLarge,
  UnknownLabel,
  EmptyFocalSet,
  BpaOutOfRange,
  InvalidMass,
  FrameMismatch,
  TotalConflict,
  SyntaxError,
  DuplicateRuleId,
  UnknownDisease,
  EmptyDiseaseSet,
  UnknownRuleId,
  DuplicateSymptom,
  NotAsserted,
  UnknownSession,
  IoError,
  StoreError,
  InvalidConfig,
};

std::string_view to_string(Errc code);

// 1-based line and column into a source document.
struct TextPosition {
  std::size_t line = 1;
  std::size_t column = 1;
};

TextPosition position_of(std::string_view text, std::size_t byte_offset);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Error(Errc code, const std::string& message, TextPosition where);

  Errc code() const noexcept { return code_; }
  const std::optional<TextPosition>& where() const noexcept { return where_; }
  // Message without the code prefix or position.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
  std::optional<TextPosition> where_;
};

}  // namespace evidentia
