#include "evidentia/kb/knowledge_base.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "evidentia/error.hpp"
#include "located_json.hpp"

namespace evidentia::kb {

using nlohmann::json;

namespace {

void validate_rule(const SymptomRule& rule, const std::vector<std::string>& hypotheses) {
  if (rule.id.empty()) throw Error(Errc::SyntaxError, "rule id must not be empty");
  if (rule.diseases.empty()) {
    throw Error(Errc::EmptyDiseaseSet, fmt::format("rule '{}' names no disease", rule.id));
  }
  std::set<std::string_view> seen;
  for (const auto& d : rule.diseases) {
    if (std::find(hypotheses.begin(), hypotheses.end(), d) == hypotheses.end()) {
      throw Error(Errc::UnknownDisease,
                  fmt::format("rule '{}' cites undeclared disease '{}'", rule.id, d));
    }
    if (!seen.insert(d).second) {
      throw Error(Errc::DuplicateLabel, fmt::format("rule '{}' lists '{}' twice", rule.id, d));
    }
  }
  if (!(rule.bpa > 0.0 && rule.bpa <= 1.0)) {
    throw Error(Errc::BpaOutOfRange,
                fmt::format("rule '{}' has bpa {} outside (0, 1]", rule.id, rule.bpa));
  }
}

ds::Frame frame_for(const std::vector<std::string>& hypotheses, const std::string& catch_all) {
  if (hypotheses.empty()) throw Error(Errc::EmptyFrame, "no hypotheses declared");
  auto labels = hypotheses;
  labels.push_back(catch_all);
  return ds::Frame::make(std::move(labels));
}

// Walks the document with positions so every error names its source location.
class DocumentReader {
 public:
  explicit DocumentReader(const detail::LocatedJson& doc) : doc_(doc) {}

  KnowledgeBase read() {
    const auto& root = doc_.value;
    if (!root.is_object()) fail_type("", "an object");
    static const std::set<std::string> known{"name", "hypotheses", "catch_all", "notes", "rules"};
    for (const auto& [key, _] : root.items()) {
      if (!known.contains(key)) {
        throw Error(Errc::SyntaxError, fmt::format("unknown field \"{}\"", key), doc_.at("/" + key));
      }
    }

    auto name = string_at(root, "", "name");
    auto hypotheses = strings_at(root, "", "hypotheses");
    auto catch_all = string_at(root, "", "catch_all");
    std::vector<std::string> notes;
    if (root.contains("notes")) notes = strings_at(root, "", "notes");

    located("/hypotheses", [&] { frame_for(hypotheses, catch_all); });

    const auto& rules_json = member(root, "", "rules");
    if (!rules_json.is_array()) fail_type("/rules", "an array");
    std::vector<SymptomRule> rules;
    std::set<std::string> ids;
    for (std::size_t i = 0; i < rules_json.size(); ++i) {
      const auto where = fmt::format("/rules/{}", i);
      auto rule = read_rule(rules_json[i], where);
      if (!ids.insert(rule.id).second) {
        throw Error(Errc::DuplicateRuleId, fmt::format("rule id '{}' is already defined", rule.id),
                    doc_.at(where + "/id"));
      }
      located(where, [&] { validate_rule(rule, hypotheses); }, [&](Errc code) {
        switch (code) {
          case Errc::BpaOutOfRange: return where + "/bpa";
          case Errc::SyntaxError: return where + "/id";
          case Errc::UnknownDisease:
          case Errc::DuplicateLabel: return disease_pointer(rule, hypotheses, where);
          default: return where + "/diseases";
        }
      });
      rules.push_back(std::move(rule));
    }
    return KnowledgeBase::create(std::move(name), std::move(hypotheses), std::move(catch_all),
                                 std::move(rules), std::move(notes));
  }

 private:
  SymptomRule read_rule(const json& node, const std::string& where) {
    if (!node.is_object()) fail_type(where, "an object");
    static const std::set<std::string> known{"id", "label", "diseases", "bpa"};
    for (const auto& [key, _] : node.items()) {
      if (!known.contains(key)) {
        throw Error(Errc::SyntaxError, fmt::format("unknown rule field \"{}\"", key),
                    doc_.at(where + "/" + key));
      }
    }
    SymptomRule rule;
    rule.id = string_at(node, where, "id");
    rule.label = string_at(node, where, "label");
    rule.diseases = strings_at(node, where, "diseases");
    const auto& bpa = member(node, where, "bpa");
    if (!bpa.is_number()) fail_type(where + "/bpa", "a number");
    rule.bpa = bpa.get<double>();
    return rule;
  }

  // Pointer to the first disease that is undeclared or repeated.
  static std::string disease_pointer(const SymptomRule& rule,
                                     const std::vector<std::string>& hypotheses,
                                     const std::string& where) {
    std::set<std::string_view> seen;
    for (std::size_t i = 0; i < rule.diseases.size(); ++i) {
      const auto& d = rule.diseases[i];
      const bool declared = std::find(hypotheses.begin(), hypotheses.end(), d) != hypotheses.end();
      if (!declared || !seen.insert(d).second) return fmt::format("{}/diseases/{}", where, i);
    }
    return where + "/diseases";
  }

  const json& member(const json& object, const std::string& where, const char* key) {
    const auto it = object.find(key);
    if (it == object.end()) {
      throw Error(Errc::SyntaxError, fmt::format("missing field \"{}\"", key), doc_.at(where));
    }
    return *it;
  }

  std::string string_at(const json& object, const std::string& where, const char* key) {
    const auto& node = member(object, where, key);
    if (!node.is_string()) fail_type(where + "/" + key, "a string");
    return node.get<std::string>();
  }

  std::vector<std::string> strings_at(const json& object, const std::string& where, const char* key) {
    const auto path = where + "/" + key;
    const auto& node = member(object, where, key);
    if (!node.is_array()) fail_type(path, "an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < node.size(); ++i) {
      if (!node[i].is_string()) fail_type(fmt::format("{}/{}", path, i), "a string");
      out.push_back(node[i].get<std::string>());
    }
    return out;
  }

  [[noreturn]] void fail_type(const std::string& pointer, const char* expected) {
    throw Error(Errc::SyntaxError,
                fmt::format("expected {} at \"{}\"", expected, pointer.empty() ? "/" : pointer),
                doc_.at(pointer));
  }

  // Re-throws a positionless validation error with the location of `pointer`.
  template <typename Fn>
  void located(const std::string& pointer, Fn&& fn) {
    located(pointer, std::forward<Fn>(fn), [&](Errc) { return pointer; });
  }

  template <typename Fn, typename PointerFor>
  void located(const std::string&, Fn&& fn, PointerFor&& pointer_for) {
    try {
      fn();
    } catch (const Error& e) {
      if (e.where()) throw;
      throw Error(e.code(), e.detail(), doc_.at(pointer_for(e.code())));
    }
  }

  const detail::LocatedJson& doc_;
};

}  // namespace

KnowledgeBase::KnowledgeBase(std::string name, std::vector<std::string> hypotheses,
                             std::string catch_all, std::vector<SymptomRule> rules,
                             std::vector<std::string> notes, ds::Frame frame)
    : name_(std::move(name)),
      hypotheses_(std::move(hypotheses)),
      catch_all_(std::move(catch_all)),
      rules_(std::move(rules)),
      notes_(std::move(notes)),
      frame_(std::move(frame)) {}

KnowledgeBase KnowledgeBase::create(std::string name, std::vector<std::string> hypotheses,
                                    std::string catch_all, std::vector<SymptomRule> rules,
                                    std::vector<std::string> notes) {
  auto frame = frame_for(hypotheses, catch_all);
  std::set<std::string_view> ids;
  for (const auto& rule : rules) {
    if (!ids.insert(rule.id).second) {
      throw Error(Errc::DuplicateRuleId, fmt::format("rule id '{}' is already defined", rule.id));
    }
    validate_rule(rule, hypotheses);
  }
  return KnowledgeBase(std::move(name), std::move(hypotheses), std::move(catch_all),
                       std::move(rules), std::move(notes), std::move(frame));
}

const SymptomRule* KnowledgeBase::find_rule(std::string_view id) const noexcept {
  const auto it = std::find_if(rules_.begin(), rules_.end(), [&](const auto& r) { return r.id == id; });
  return it == rules_.end() ? nullptr : &*it;
}

const SymptomRule& KnowledgeBase::rule(std::string_view id) const {
  if (const auto* r = find_rule(id)) return *r;
  throw Error(Errc::UnknownRuleId, fmt::format("no symptom with id '{}'", id));
}

std::vector<std::string> KnowledgeBase::rule_ids() const {
  std::vector<std::string> ids;
  ids.reserve(rules_.size());
  for (const auto& r : rules_) ids.push_back(r.id);
  return ids;
}

KnowledgeBase parse_kb(std::string_view text) {
  const auto doc = detail::parse_located(text);
  return DocumentReader(doc).read();
}

KnowledgeBase load_kb(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::IoError, fmt::format("cannot open '{}'", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw Error(Errc::IoError, fmt::format("cannot read '{}'", path.string()));
  }
  return parse_kb(buffer.str());
}

std::string serialize_kb(const KnowledgeBase& kb) {
  nlohmann::ordered_json doc;
  doc["name"] = kb.name();
  doc["hypotheses"] = kb.hypotheses();
  doc["catch_all"] = kb.catch_all();
  if (!kb.notes().empty()) doc["notes"] = kb.notes();
  doc["rules"] = nlohmann::ordered_json::array();
  for (const auto& rule : kb.rules()) {
    doc["rules"].push_back({{"id", rule.id},
                            {"label", rule.label},
                            {"diseases", rule.diseases},
                            {"bpa", rule.bpa}});
  }
  return doc.dump(2) + "\n";
}

ds::FocalSet rule_focal_set(const KnowledgeBase& kb, const SymptomRule& rule) {
  return ds::FocalSet::of(kb.frame(), rule.diseases);
}

ds::MassFunction rule_mass(const KnowledgeBase& kb, std::string_view rule_id) {
  const auto& rule = kb.rule(rule_id);
  return ds::simple_support_mass(kb.frame(), rule_focal_set(kb, rule), rule.bpa);
}

}  // namespace evidentia::kb
