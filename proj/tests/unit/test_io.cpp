#include <gtest/gtest.h>

#include "cogsem/io.hpp"
#include "support.hpp"

using namespace cogsem;

namespace {

const char* kModel = R"({
  "version": 1,
  "worlds": {"real": {"dimension": 1}},
  "powers": {"eye": {"state": ["t", "s1"], "resolution": ["s0"], "result": ["what"]}},
  "observations": [
    {"id": "a", "world": "real", "observer": {"labels": ["me"], "power": "eye", "state": [0, "home"]},
     "rpoint": [[0]], "result": "cat"},
    {"id": "b", "world": "real", "observer": {"labels": ["me"], "power": "eye", "state": [1, "home"]},
     "rpoint": [[1]], "result": "cat"}
  ],
  "elements": {
    "cat": {"kind": "composite", "members": ["a", "b"]},
    "pets": {"kind": "set", "items": ["cat"]},
    "walk": {"kind": "process", "world": "real", "segment": [0, 1], "region": [[0], [1]]},
    "quote": {"kind": "string", "text": "meow"}
  }
})";

std::string message(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Io, ParsesAModel) {
  CognitiveModel m = parse_model(kModel);
  EXPECT_EQ(m.observations().size(), 2u);
  ASSERT_TRUE(m.element("pets"));
  EXPECT_EQ(m.element("pets")->as_set()->items.size(), 1u);
  ASSERT_TRUE(m.element("walk"));
  EXPECT_EQ(m.element("walk")->as_composite()->size(), 2u);
  EXPECT_EQ(m.element("quote")->as_string()->text, "meow");
  EXPECT_TRUE(m.observation_by_name("a"));
}

TEST(Io, SyntaxErrorsCarryAPosition) {
  auto msg = message([] { parse_model("{\n  \"version\": 1,\n  oops\n}", "m.json"); });
  EXPECT_EQ(msg.rfind("m.json:3:", 0), 0u) << msg;
}

TEST(Io, ContentErrorsNameThePath) {
  EXPECT_NE(message([] { parse_model(R"({"worlds": {}})", "m.json"); }).find("version"), std::string::npos);
  std::string bad = kModel;
  bad.replace(bad.find("\"members\": [\"a\", \"b\"]"), 21, "\"members\": [\"a\", \"z\"]");
  auto msg = message([&] { parse_model(bad, "m.json"); });
  EXPECT_EQ(msg.rfind("m.json: ", 0), 0u) << msg;
  EXPECT_NE(msg.find("z"), std::string::npos) << msg;
}

TEST(Io, ElementCyclesAreRejected) {
  std::string cyc = R"({"version": 1, "elements": {
    "x": {"kind": "set", "items": ["y"]}, "y": {"kind": "set", "items": ["x"]}}})";
  EXPECT_FALSE(message([&] { parse_model(cyc); }).empty());
}

TEST(Io, LexiconContextAndTree) {
  CognitiveModel m = parse_model(kModel);
  Lexicon lex = parse_lexicon(R"({"version": 1, "entries": {
      "cat": ["cat"], ",": [], "every": [{"op": "quantifier", "sort": "forall", "var": 1}]}})", m);
  EXPECT_TRUE(lex.find(",")->empty_meaning);
  EXPECT_TRUE(lex.find("every")->denotations.at(0).operation()->quantifier());
  EXPECT_FALSE(message([&] { parse_lexicon(R"({"version": 1, "entries": {"dog": ["dog"]}})", m); }).empty());

  Context ctx = parse_context(R"({"version": 1, "world": "real", "time_window": [0, 3], "most": 0.7,
      "conventions": {"default": [{"op": "basic", "match": "strong", "var": 1}]},
      "directives": {"cat": {"index": 0}}})", m);
  EXPECT_EQ(ctx.selected_world, "real");
  EXPECT_EQ(ctx.most_threshold, 0.7);
  EXPECT_EQ(ctx.conventions.at("default").at(0).basic()->match, Match::strong);
  EXPECT_FALSE(message([&] { parse_context(R"({"version": 1, "most": 1.5})", m); }).empty());

  DepTree t = parse_tree(R"({"version": 1, "sentence": false, "tree": ["big", {"token": "cat", "quoted": true}]})");
  EXPECT_EQ(t.sentence, false);
  EXPECT_EQ(t.pattern, "default");
  EXPECT_TRUE(t.head().quoted);
  EXPECT_FALSE(message([] { parse_tree(R"({"version": 1, "tree": ["a", "b", "c"]})"); }).empty());
}

TEST(Io, MissingFile) {
  EXPECT_THROW(load_model(cogsem::testing::fixture("nope.json")), InputError);
}
