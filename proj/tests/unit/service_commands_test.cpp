#include <gtest/gtest.h>

#include <sstream>

#include "evidentia/service/commands.hpp"
#include "support/reference_kb.hpp"

using namespace evidentia::service;
namespace t = evidentia::testing;

namespace {

const std::string kKb = EVIDENTIA_REFERENCE_KB;

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run consult(const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int status = run_consult(kKb, in, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST(Validate, ReferenceKb) {
  std::ostringstream out, err;
  EXPECT_EQ(run_validate(kKb, out, err), 0);
  EXPECT_NE(out.str().find("6 hypotheses (+1 catch-all), 5 rules"), std::string::npos);
  EXPECT_TRUE(err.str().empty());
}

TEST(Validate, TrailingGarbageHasPosition) {
  std::ostringstream out, err;
  const auto path = std::string(EVIDENTIA_FIXTURES) + "/bad_kb/trailing_garbage.kb.json";
  EXPECT_EQ(run_validate(path, out, err), 1);
  EXPECT_NE(err.str().find(path + ":63:1: error: SyntaxError"), std::string::npos) << err.str();
}

TEST(Validate, MissingFile) {
  std::ostringstream out, err;
  EXPECT_EQ(run_validate("/nonexistent/kb.json", out, err), 2);
  EXPECT_NE(err.str().find("/nonexistent/kb.json"), std::string::npos);
  EXPECT_NE(err.str().find("IoError"), std::string::npos);
}

TEST(Evaluate, AllFiveSymptoms) {
  std::ostringstream out, err;
  EXPECT_EQ(run_evaluate(kKb, t::five_symptoms(), ReportFormat::text, out, err), 0);
  const auto line = first_line(out.str());
  ASSERT_EQ(line.substr(0, 3), "AI ");
  EXPECT_NEAR(std::stod(line.substr(3)), 0.58726, 1e-4);
}

TEST(Evaluate, NoSymptoms) {
  std::ostringstream out, err;
  EXPECT_EQ(run_evaluate(kKb, {}, ReportFormat::text, out, err), 0);
  const auto text = out.str();
  EXPECT_EQ(first_line(text), "Θ 1.00000");
  EXPECT_EQ(text.find("{"), std::string::npos);
}

TEST(Evaluate, NarrowEyesOnly) {
  std::ostringstream out, err;
  EXPECT_EQ(run_evaluate(kKb, {"narrow_eyes"}, ReportFormat::text, out, err), 0);
  EXPECT_EQ(first_line(out.str()), "SHS 0.90000");
}

TEST(Evaluate, UnknownIdListsValidOnes) {
  std::ostringstream out, err;
  EXPECT_EQ(run_evaluate(kKb, {"depression", "lachrymal_glands"}, ReportFormat::text, out, err), 1);
  EXPECT_NE(err.str().find("lachrymal_glands"), std::string::npos);
  EXPECT_NE(err.str().find("depression, combs_wattle_bluish, swollen_face, narrow_eyes, balance_disorders"),
            std::string::npos);
  EXPECT_TRUE(out.str().empty());
}

TEST(Evaluate, RepeatedIdFails) {
  std::ostringstream out, err;
  EXPECT_EQ(run_evaluate(kKb, {"depression", "depression"}, ReportFormat::text, out, err), 1);
  EXPECT_NE(err.str().find("DuplicateSymptom"), std::string::npos);
}

TEST(Evaluate, TotalConflictFails) {
  std::ostringstream out, err;
  const auto path = std::string(EVIDENTIA_FIXTURES) + "/kb/total_conflict.kb.json";
  EXPECT_EQ(run_evaluate(path, {"proves_a", "proves_b"}, ReportFormat::text, out, err), 1);
  EXPECT_NE(err.str().find("TotalConflict"), std::string::npos);
}

TEST(Evaluate, JsonIsCanonical) {
  std::ostringstream out, err;
  EXPECT_EQ(run_evaluate(kKb, t::five_symptoms(), ReportFormat::json, out, err), 0);
  EXPECT_EQ(out.str().rfind("{\n  \"top\": {\"set\": [\"AI\"], \"mass\": 0.58728,", 0), 0u) << out.str();
}

TEST(Consult, SelectDepression) {
  const auto r = consult("1\nq\n");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("{AI,ND,FC,IBRespi,IBRepro,SHS}  0.70000"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("Θ                               0.30000"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("Session "), std::string::npos);
}

TEST(Consult, SelectByIdThenRetract) {
  const auto r = consult("depression\nnarrow_eyes\n-narrow_eyes\nq\n");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("Retracted narrow_eyes."), std::string::npos);
  // After retraction the ranking is the depression-only one again.
  const auto tail = r.out.substr(r.out.find("Retracted narrow_eyes."));
  EXPECT_NE(tail.find("{AI,ND,FC,IBRespi,IBRepro,SHS} 0.70000"), std::string::npos) << tail;
  EXPECT_NE(r.out.find("1 symptom(s) asserted: depression"), std::string::npos);
}

TEST(Consult, ReportsConflictPerStep) {
  const auto r = consult("1\n2\n3\n4\nq\n");
  EXPECT_NE(r.out.find("Asserted narrow_eyes (K = 0.88470)."), std::string::npos);
  EXPECT_NE(r.out.find("conflict K per step: 0.00000 0.00000 0.00000 0.88470"), std::string::npos);
}

TEST(Consult, InvalidSelectionDoesNotChangeState) {
  const auto r = consult("9\nbogus\n-depression\nq\n");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("Not applied: UnknownRuleId: no symptom number 9"), std::string::npos);
  EXPECT_NE(r.out.find("Not applied: UnknownRuleId: no symptom with id 'bogus'"), std::string::npos);
  EXPECT_NE(r.out.find("Not applied: NotAsserted"), std::string::npos);
  EXPECT_NE(r.out.find("0 symptom(s) asserted"), std::string::npos);
  EXPECT_NE(r.out.find("Most supported: Θ 1.00000"), std::string::npos);
}

TEST(Consult, EndOfInputQuits) {
  const auto r = consult("2\n");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("Most supported: AI 0.90000"), std::string::npos);
}

TEST(Consult, AssertedSymptomsLeaveTheList) {
  const auto r = consult("narrow_eyes\nq\n");
  const auto last_menu = r.out.substr(r.out.rfind("Symptoms:"));
  EXPECT_EQ(last_menu.find("narrow_eyes "), std::string::npos);
  EXPECT_NE(last_menu.find("Asserted: narrow_eyes"), std::string::npos);
}
