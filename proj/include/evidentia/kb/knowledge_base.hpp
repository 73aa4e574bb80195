#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "evidentia/ds/focal_set.hpp"
#include "evidentia/ds/frame.hpp"
#include "evidentia/ds/mass_function.hpp"

namespace evidentia::kb {

// One observation and the set of hypotheses it supports, with its bpa.
struct SymptomRule {
  std::string id;
  std::string label;
  std::vector<std::string> diseases;
  double bpa = 0.0;

  friend bool operator==(const SymptomRule&, const SymptomRule&) = default;
};

// Validated, immutable rule base. The frame is the declared hypotheses in
// order followed by the catch-all element.
class KnowledgeBase {
 public:
  // Throws DuplicateRuleId, UnknownDisease, EmptyDiseaseSet, BpaOutOfRange,
  // DuplicateLabel, EmptyFrame or FrameTooLarge.
  static KnowledgeBase create(std::string name, std::vector<std::string> hypotheses,
                              std::string catch_all, std::vector<SymptomRule> rules,
                              std::vector<std::string> notes = {});

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& hypotheses() const noexcept { return hypotheses_; }
  const std::string& catch_all() const noexcept { return catch_all_; }
  const std::vector<SymptomRule>& rules() const noexcept { return rules_; }
  // Free-form documentation lines carried along with the file.
  const std::vector<std::string>& notes() const noexcept { return notes_; }
  const ds::Frame& frame() const noexcept { return frame_; }

  // nullptr when absent.
  const SymptomRule* find_rule(std::string_view id) const noexcept;
  // Throws UnknownRuleId.
  const SymptomRule& rule(std::string_view id) const;
  std::vector<std::string> rule_ids() const;

 private:
  KnowledgeBase(std::string name, std::vector<std::string> hypotheses, std::string catch_all,
                std::vector<SymptomRule> rules, std::vector<std::string> notes, ds::Frame frame);

  std::string name_;
  std::vector<std::string> hypotheses_;
  std::string catch_all_;
  std::vector<SymptomRule> rules_;
  std::vector<std::string> notes_;
  ds::Frame frame_;
};

// Parses and validates a KB document. Every failure is an Error carrying the
// line and column of the offending value.
KnowledgeBase parse_kb(std::string_view text);
// Throws IoError when the file cannot be read, otherwise as parse_kb.
KnowledgeBase load_kb(const std::filesystem::path& path);
std::string serialize_kb(const KnowledgeBase& kb);

inline const ds::Frame& kb_frame(const KnowledgeBase& kb) { return kb.frame(); }
ds::FocalSet rule_focal_set(const KnowledgeBase& kb, const SymptomRule& rule);
// Simple support mass of a rule. Throws UnknownRuleId.
ds::MassFunction rule_mass(const KnowledgeBase& kb, std::string_view rule_id);

}  // namespace evidentia::kb
