#include <gtest/gtest.h>

#include "cogsem/report.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace cogsem;
using namespace cogsem::testing;
using nlohmann::json;

TEST(Report, FormatNames) {
  EXPECT_EQ(parse_format("text"), Format::text);
  EXPECT_EQ(parse_format("structured"), Format::structured);
  EXPECT_FALSE(parse_format("xml"));
}

TEST(Report, DescribeMarksVacancy) {
  CognitiveModel m;
  m.add_element("nobody", Element::set({}));
  EXPECT_EQ(describe(Element::set({}), m), "nobody (vacant)");
  auto op = basic_op(Match::weak, 1);
  EXPECT_NE(describe(op, m).find(op.signature()), std::string::npos);
}

TEST(Report, Violations) {
  CognitiveModel m = load_model(fixture("validate") / "dress.json");
  auto v = audit(m);
  std::string text = render_violations(v, m, Format::text);
  EXPECT_NE(text.find("invalid"), std::string::npos);
  json j = json::parse(render_violations(v, m, Format::structured));
  EXPECT_FALSE(j.at("valid").get<bool>());
  EXPECT_EQ(j.at("observations").get<std::size_t>(), m.observations().size());
}

TEST(Report, InterpretationListsCandidates) {
  auto l = load("hamlet", "model.json", "lexicon.json", "context.json", "tree.json");
  std::string text = render_interpretation(l.interp, l.model, Format::text);
  EXPECT_NE(text.find("effective: no (ambiguous: n0)"), std::string::npos) << text;
  json j = json::parse(render_interpretation(l.interp, l.model, Format::structured));
  EXPECT_FALSE(j.at("effective").get<bool>());
  EXPECT_EQ(j.at("nodes").at(0).at("readings").size(), 5u);
}

TEST(Report, VerdictWithWitnesses) {
  auto l = load("tom_ran", "model_F.json", "lexicon.json", "context.json", "tree.json");
  EvalOptions opts;
  auto r = eval_sentence(l.interp, l.model, opts);
  std::string text = render_verdict(r, l.model, opts, Format::text);
  EXPECT_EQ(text.rfind("verdict: F\n", 0), 0u) << text;
  EXPECT_NE(text.find("witness: o9 refutes o2"), std::string::npos) << text;
  json j = json::parse(render_verdict(r, l.model, opts, Format::structured));
  EXPECT_EQ(j.at("verdict"), "F");
  EXPECT_EQ(j.at("logic"), "kleene");
  EXPECT_TRUE(j.at("trace").at(0).contains("witnesses"));
}
