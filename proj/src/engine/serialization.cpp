#include "evidentia/engine/serialization.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace evidentia::engine {

using nlohmann::ordered_json;

namespace {

std::string fixed5(double v) { return fmt::format("{:.5f}", v); }

std::string canonical_set(const ds::FocalSet& set) {
  std::vector<std::string> quoted;
  for (const auto& label : set.labels()) quoted.push_back(nlohmann::json(label).dump());
  return fmt::format("[{}]", fmt::join(quoted, ", "));
}

std::string canonical_entry(const RankedEntry& e) {
  return fmt::format(R"({{"set": {}, "mass": {}, "belief": {}, "plausibility": {}}})",
                     canonical_set(e.set), fixed5(e.mass), fixed5(e.belief),
                     fixed5(e.plausibility));
}

ordered_json entry_json(const RankedEntry& e) {
  return {{"set", focal_set_json(e.set)},
          {"mass", e.mass},
          {"belief", e.belief},
          {"plausibility", e.plausibility}};
}

}  // namespace

ordered_json focal_set_json(const ds::FocalSet& set) { return set.labels(); }

ordered_json mass_json(const ds::MassFunction& mass) {
  auto out = ordered_json::array();
  for (const auto& e : mass.entries()) {
    out.push_back({{"set", focal_set_json(e.set)}, {"mass", e.mass}});
  }
  return out;
}

ordered_json report_json(const DiagnosisReport& report) {
  ordered_json out;
  out["top"] = entry_json(report.top());
  out["ranked"] = ordered_json::array();
  for (const auto& e : report.ranked) out["ranked"].push_back(entry_json(e));
  out["conflict_history"] = report.conflict_history;
  return out;
}

ordered_json step_json(const CombinationStep& step) {
  ordered_json out;
  out["symptom_id"] = step.symptom_id;
  out["prior"] = mass_json(step.prior);
  out["evidence"] = mass_json(step.evidence);
  out["products"] = ordered_json::array();
  for (const auto& cell : step.products) {
    out["products"].push_back({{"left", focal_set_json(cell.left)},
                               {"right", focal_set_json(cell.right)},
                               {"intersection", focal_set_json(cell.intersection)},
                               {"product", cell.product},
                               {"conflict", cell.intersection.empty()}});
  }
  out["conflict_k"] = step.conflict_k;
  out["normalizer"] = 1.0 - step.conflict_k;
  out["posterior"] = mass_json(step.posterior);
  return out;
}

ordered_json trace_json(const std::vector<CombinationStep>& trace) {
  auto out = ordered_json::array();
  for (const auto& step : trace) out.push_back(step_json(step));
  return out;
}

std::string canonical_report(const DiagnosisReport& report) {
  std::string out = "{\n";
  out += fmt::format("  \"top\": {},\n", canonical_entry(report.top()));
  out += "  \"ranked\": [\n";
  for (std::size_t i = 0; i < report.ranked.size(); ++i) {
    out += fmt::format("    {}{}\n", canonical_entry(report.ranked[i]),
                       i + 1 < report.ranked.size() ? "," : "");
  }
  out += "  ],\n";
  std::vector<std::string> ks;
  for (double k : report.conflict_history) ks.push_back(fixed5(k));
  out += fmt::format("  \"conflict_history\": [{}]\n", fmt::join(ks, ", "));
  out += "}\n";
  return out;
}

std::string report_text(const DiagnosisReport& report) {
  std::size_t width = 10;
  for (const auto& e : report.ranked) width = std::max(width, e.set.display().size());
  std::string out = fmt::format("{} {}\n", report.top().set.display(), fixed5(report.top().mass));
  out += fmt::format("{:>4}  {:<{}}  {:>7}  {:>7}  {:>7}\n", "rank", "hypothesis", width, "mass",
                     "belief", "plaus.");
  for (std::size_t i = 0; i < report.ranked.size(); ++i) {
    const auto& e = report.ranked[i];
    out += fmt::format("{:>4}  {:<{}}  {}  {}  {}\n", i + 1, e.set.display(), width, fixed5(e.mass),
                       fixed5(e.belief), fixed5(e.plausibility));
  }
  if (!report.conflict_history.empty()) {
    std::vector<std::string> ks;
    for (double k : report.conflict_history) ks.push_back(fixed5(k));
    out += fmt::format("conflict K per step: {}\n", fmt::join(ks, " "));
  }
  return out;
}

}  // namespace evidentia::engine
