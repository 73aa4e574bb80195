#include <gtest/gtest.h>

#include "evidentia/engine/serialization.hpp"
#include "support/reference_kb.hpp"

using namespace evidentia::engine;
namespace t = evidentia::testing;

namespace {

ConsultationSession five_symptom_session() {
  ConsultationSession s(t::reference_kb());
  for (const auto& id : t::five_symptoms()) s.assert_symptom(id);
  return s;
}

}  // namespace

TEST(CanonicalReport, EmptySession) {
  ConsultationSession s(t::reference_kb());
  const std::string expected =
      "{\n"
      "  \"top\": {\"set\": [\"AI\", \"ND\", \"FC\", \"IBRespi\", \"IBRepro\", \"SHS\", \"OTHER\"], "
      "\"mass\": 1.00000, \"belief\": 1.00000, \"plausibility\": 1.00000},\n"
      "  \"ranked\": [\n"
      "    {\"set\": [\"AI\", \"ND\", \"FC\", \"IBRespi\", \"IBRepro\", \"SHS\", \"OTHER\"], "
      "\"mass\": 1.00000, \"belief\": 1.00000, \"plausibility\": 1.00000}\n"
      "  ],\n"
      "  \"conflict_history\": []\n"
      "}\n";
  EXPECT_EQ(canonical_report(s.evaluate()), expected);
}

TEST(CanonicalReport, IsValidJsonWithFiveDecimalNumbers) {
  const auto text = canonical_report(five_symptom_session().evaluate());
  const auto doc = nlohmann::json::parse(text);
  EXPECT_EQ(doc["top"]["set"], nlohmann::json::array({"AI"}));
  EXPECT_NEAR(doc["top"]["mass"].get<double>(), 0.58726, 1e-4);
  EXPECT_EQ(doc["ranked"].size(), 7u);
  EXPECT_NE(text.find("\"mass\": 0.58728"), std::string::npos);
  EXPECT_NE(text.find("\"conflict_history\": [0.00000, 0.00000, 0.00000, 0.88470, 0.46834]"),
            std::string::npos);
}

TEST(CanonicalReport, Deterministic) {
  EXPECT_EQ(canonical_report(five_symptom_session().evaluate()), canonical_report(five_symptom_session().evaluate()));
}

TEST(ReportJson, FullPrecision) {
  const auto doc = report_json(five_symptom_session().evaluate());
  EXPECT_EQ(doc["top"]["mass"].get<double>(), five_symptom_session().evaluate().top().mass);
  EXPECT_EQ(doc["ranked"].back()["set"].size(), 7u);
}

TEST(ReportText, TopLineFirst) {
  const auto text = report_text(five_symptom_session().evaluate());
  EXPECT_EQ(text.substr(0, text.find('\n')), "AI 0.58728");
  EXPECT_NE(text.find("conflict K per step: 0.00000 0.00000 0.00000 0.88470 0.46834"),
            std::string::npos);

  ConsultationSession empty(t::reference_kb());
  const auto e = report_text(empty.evaluate());
  EXPECT_EQ(e.substr(0, e.find('\n')), "Θ 1.00000");
}

TEST(TraceJson, MarksConflictCells) {
  const auto s = five_symptom_session();
  const auto doc = trace_json(s.explain());
  ASSERT_EQ(doc.size(), 5u);
  const auto& step4 = doc[3];
  EXPECT_EQ(step4["symptom_id"], "narrow_eyes");
  std::vector<double> conflicting;
  for (const auto& cell : step4["products"]) {
    if (cell["conflict"].get<bool>()) conflicting.push_back(cell["product"].get<double>());
  }
  ASSERT_EQ(conflicting.size(), 2u);
  std::sort(conflicting.begin(), conflicting.end());
  EXPECT_NEAR(conflicting[0], 0.0747, 1e-12);
  EXPECT_NEAR(conflicting[1], 0.81, 1e-12);
  EXPECT_NEAR(step4["normalizer"].get<double>(), 1.0 - 0.8847, 1e-12);
}
