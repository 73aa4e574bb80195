#include "evidentia/engine/session.hpp"

#include <algorithm>
#include <random>

#include <fmt/format.h>

#include "evidentia/error.hpp"

namespace evidentia::engine {

namespace {

bool ranks_before(const RankedEntry& a, const RankedEntry& b) {
  if (a.mass != b.mass) return a.mass > b.mass;
  if (a.set.size() != b.set.size()) return a.set.size() < b.set.size();
  return a.set.labels() < b.set.labels();
}

CombinationStep make_step(const kb::KnowledgeBase& kb, const ds::MassFunction& prior,
                          std::string_view rule_id) {
  auto evidence = kb::rule_mass(kb, rule_id);
  auto detail = ds::combine_detailed(prior, evidence);
  return {std::string(rule_id), prior,           std::move(evidence), std::move(detail.products),
          detail.conflict,      std::move(detail.mass)};
}

}  // namespace

DiagnosisReport make_report(const ds::MassFunction& mass, std::vector<double> conflict_history) {
  DiagnosisReport report;
  report.conflict_history = std::move(conflict_history);
  report.ranked.reserve(mass.size());
  for (const auto& e : mass.entries()) {
    report.ranked.push_back({e.set, e.mass, ds::belief(mass, e.set), ds::plausibility(mass, e.set)});
  }
  std::sort(report.ranked.begin(), report.ranked.end(), ranks_before);
  return report;
}

std::string new_session_id() {
  thread_local std::mt19937_64 rng{std::random_device{}()};
  return fmt::format("{:016x}{:016x}", rng(), rng());
}

ConsultationSession::ConsultationSession(std::shared_ptr<const kb::KnowledgeBase> kb)
    : ConsultationSession(std::move(kb), new_session_id()) {}

ConsultationSession::ConsultationSession(std::shared_ptr<const kb::KnowledgeBase> kb, std::string id)
    : kb_(std::move(kb)), id_(std::move(id)), current_(ds::vacuous_mass(kb_->frame())) {}

ConsultationSession ConsultationSession::restore(std::shared_ptr<const kb::KnowledgeBase> kb,
                                                 std::string id,
                                                 const std::vector<std::string>& asserted) {
  ConsultationSession session(std::move(kb), std::move(id));
  for (const auto& rule_id : asserted) session.assert_symptom(rule_id);
  return session;
}

const CombinationStep& ConsultationSession::assert_symptom(std::string_view rule_id) {
  if (std::find(asserted_.begin(), asserted_.end(), rule_id) != asserted_.end()) {
    throw Error(Errc::DuplicateSymptom, fmt::format("'{}' is already asserted", rule_id));
  }
  auto step = make_step(*kb_, current_, rule_id);
  trace_.reserve(trace_.size() + 1);
  asserted_.reserve(asserted_.size() + 1);
  current_ = step.posterior;
  asserted_.emplace_back(rule_id);
  trace_.push_back(std::move(step));
  return trace_.back();
}

void ConsultationSession::retract_symptom(std::string_view rule_id) {
  const auto it = std::find(asserted_.begin(), asserted_.end(), rule_id);
  if (it == asserted_.end()) {
    throw Error(Errc::NotAsserted, fmt::format("'{}' is not asserted", rule_id));
  }
  std::vector<std::string> remaining;
  for (const auto& id : asserted_) {
    if (id != rule_id) remaining.push_back(id);
  }
  *this = restore(kb_, id_, remaining);
}

DiagnosisReport ConsultationSession::evaluate() const {
  std::vector<double> history;
  history.reserve(trace_.size());
  for (const auto& step : trace_) history.push_back(step.conflict_k);
  return make_report(current_, std::move(history));
}

}  // namespace evidentia::engine
