#include "evidentia/service/commands.hpp"

#include <algorithm>
#include <istream>
#include <memory>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "evidentia/engine/serialization.hpp"
#include "evidentia/engine/session.hpp"
#include "evidentia/error.hpp"
#include "evidentia/kb/knowledge_base.hpp"

namespace evidentia::service {

namespace {

void print_diagnostic(std::ostream& err, const std::filesystem::path& path, const Error& e) {
  if (e.where()) {
    fmt::print(err, "{}:{}:{}: error: {}: {}\n", path.string(), e.where()->line, e.where()->column,
               to_string(e.code()), e.detail());
  } else {
    fmt::print(err, "{}: error: {}: {}\n", path.string(), to_string(e.code()), e.detail());
  }
}

int exit_code_for(const Error& e) { return e.code() == Errc::IoError ? 2 : 1; }

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

class Consultation {
 public:
  Consultation(std::shared_ptr<const kb::KnowledgeBase> kb, std::ostream& out)
      : session_(std::move(kb)), out_(out) {}

  void list_symptoms() const {
    fmt::print(out_, "Symptoms:\n");
    const auto& rules = session_.kb().rules();
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (is_asserted(rules[i].id)) continue;
      fmt::print(out_, "  {:>2}) {:<22} {}\n", i + 1, rules[i].id, rules[i].label);
    }
    if (!session_.asserted().empty()) {
      fmt::print(out_, "Asserted: {}\n", fmt::join(session_.asserted(), ", "));
    }
    fmt::print(out_, "Enter a number or id to assert, -<id> to retract, q to quit.\n");
  }

  // Returns false when the user quits.
  bool handle(const std::string& line) {
    if (line == "q" || line == "quit") return false;
    if (line.empty()) return true;
    try {
      if (line.front() == '-') {
        const auto id = resolve(trim(line.substr(1)));
        session_.retract_symptom(id);
        fmt::print(out_, "Retracted {}.\n", id);
      } else {
        const auto id = resolve(line);
        const auto& step = session_.assert_symptom(id);
        fmt::print(out_, "Asserted {} (K = {:.5f}).\n", id, step.conflict_k);
      }
      out_ << engine::report_text(session_.evaluate());
    } catch (const Error& e) {
      fmt::print(out_, "Not applied: {}\n", e.what());
    }
    return true;
  }

  void summary() const {
    const auto report = session_.evaluate();
    fmt::print(out_, "Session {}: {} symptom(s) asserted{}{}\n", session_.id(), session_.asserted().size(),
               session_.asserted().empty() ? "" : ": ", fmt::join(session_.asserted(), ", "));
    fmt::print(out_, "Most supported: {} {:.5f}\n", report.top().set.display(), report.top().mass);
  }

 private:
  bool is_asserted(const std::string& id) const {
    const auto& a = session_.asserted();
    return std::find(a.begin(), a.end(), id) != a.end();
  }

  // Accepts a 1-based number from the symptom list or a rule id.
  std::string resolve(const std::string& token) const {
    const auto& rules = session_.kb().rules();
    if (!token.empty() && std::all_of(token.begin(), token.end(), ::isdigit)) {
      const auto n = std::stoul(token);
      if (n >= 1 && n <= rules.size()) return rules[n - 1].id;
      throw Error(Errc::UnknownRuleId, fmt::format("no symptom number {}", token));
    }
    return session_.kb().rule(token).id;
  }

  engine::ConsultationSession session_;
  std::ostream& out_;
};

}  // namespace

int run_validate(const std::filesystem::path& kb_path, std::ostream& out, std::ostream& err) {
  try {
    const auto kb = kb::load_kb(kb_path);
    fmt::print(out, "{}: {} hypotheses (+1 catch-all), {} rules\n", kb.name(), kb.hypotheses().size(),
               kb.rules().size());
    return 0;
  } catch (const Error& e) {
    print_diagnostic(err, kb_path, e);
    return exit_code_for(e);
  }
}

int run_evaluate(const std::filesystem::path& kb_path, const std::vector<std::string>& symptom_ids,
                 ReportFormat format, std::ostream& out, std::ostream& err) {
  std::shared_ptr<const kb::KnowledgeBase> kb;
  try {
    kb = std::make_shared<const kb::KnowledgeBase>(kb::load_kb(kb_path));
  } catch (const Error& e) {
    print_diagnostic(err, kb_path, e);
    return exit_code_for(e);
  }
  engine::ConsultationSession session(kb);
  for (const auto& id : symptom_ids) {
    try {
      session.assert_symptom(id);
    } catch (const Error& e) {
      fmt::print(err, "error: {}\n", e.what());
      if (e.code() == Errc::UnknownRuleId) {
        fmt::print(err, "valid symptom ids: {}\n", fmt::join(kb->rule_ids(), ", "));
      }
      return 1;
    }
  }
  const auto report = session.evaluate();
  out << (format == ReportFormat::json ? engine::canonical_report(report) : engine::report_text(report));
  return 0;
}

int run_consult(const std::filesystem::path& kb_path, std::istream& in, std::ostream& out,
                std::ostream& err) {
  std::shared_ptr<const kb::KnowledgeBase> kb;
  try {
    kb = std::make_shared<const kb::KnowledgeBase>(kb::load_kb(kb_path));
  } catch (const Error& e) {
    print_diagnostic(err, kb_path, e);
    return exit_code_for(e);
  }
  Consultation consultation(kb, out);
  std::string line;
  while (true) {
    consultation.list_symptoms();
    out << "> " << std::flush;
    if (!std::getline(in, line)) {
      out << '\n';
      break;
    }
    if (!consultation.handle(trim(line))) break;
  }
  consultation.summary();
  return 0;
}

}  // namespace evidentia::service
