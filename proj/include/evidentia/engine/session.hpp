#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "evidentia/ds/combination.hpp"
#include "evidentia/kb/knowledge_base.hpp"

namespace evidentia::engine {

// One application of Dempster's rule: the running mass crossed with one
// symptom's evidence.
struct CombinationStep {
  std::string symptom_id;
  ds::MassFunction prior;
  ds::MassFunction evidence;
  std::vector<ds::ProductCell> products;
  double conflict_k;
  ds::MassFunction posterior;
};

struct RankedEntry {
  ds::FocalSet set;
  double mass;
  double belief;
  double plausibility;
};

// Focal sets of the combined mass, best first: mass descending, then smaller
// sets, then lexicographic member labels.
struct DiagnosisReport {
  std::vector<RankedEntry> ranked;
  std::vector<double> conflict_history;

  const RankedEntry& top() const { return ranked.front(); }
};

DiagnosisReport make_report(const ds::MassFunction& mass, std::vector<double> conflict_history);

// Random 128-bit token in hex.
std::string new_session_id();

// Evidence gathered during one consultation. The combined mass is always the
// left fold of the asserted rules' masses, in assertion order, starting from
// total ignorance. Mutators leave the session untouched when they throw.
// Not synchronized: callers serialize mutations of one session.
class ConsultationSession {
 public:
  explicit ConsultationSession(std::shared_ptr<const kb::KnowledgeBase> kb);
  ConsultationSession(std::shared_ptr<const kb::KnowledgeBase> kb, std::string id);

  // Rebuilds a session from its assertion list. Throws UnknownRuleId,
  // DuplicateSymptom or TotalConflict.
  static ConsultationSession restore(std::shared_ptr<const kb::KnowledgeBase> kb, std::string id,
                                     const std::vector<std::string>& asserted);

  const std::string& id() const noexcept { return id_; }
  const kb::KnowledgeBase& kb() const noexcept { return *kb_; }
  const std::shared_ptr<const kb::KnowledgeBase>& kb_ptr() const noexcept { return kb_; }
  const std::vector<std::string>& asserted() const noexcept { return asserted_; }
  const ds::MassFunction& current() const noexcept { return current_; }

  // Throws UnknownRuleId, DuplicateSymptom or TotalConflict.
  const CombinationStep& assert_symptom(std::string_view rule_id);
  // Throws NotAsserted.
  void retract_symptom(std::string_view rule_id);

  DiagnosisReport evaluate() const;
  const std::vector<CombinationStep>& explain() const noexcept { return trace_; }

 private:
  std::shared_ptr<const kb::KnowledgeBase> kb_;
  std::string id_;
  std::vector<std::string> asserted_;
  ds::MassFunction current_;
  std::vector<CombinationStep> trace_;
};

inline ConsultationSession start_session(std::shared_ptr<const kb::KnowledgeBase> kb) {
  return ConsultationSession(std::move(kb));
}

}  // namespace evidentia::engine
