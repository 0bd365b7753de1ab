#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cogsem_cli/cli.hpp"
#include "json.hpp"
#include "support.hpp"

using cogsem::testing::fixture;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::vector<const char*> argv{"cogsem"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cogsem::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string f(const std::string& dir, const std::string& file) { return (fixture(dir) / file).string(); }

std::vector<std::string> sentence(const std::string& cmd, const std::string& dir, const std::string& model,
                                  const std::string& tree = "tree.json", const std::string& lexicon = "lexicon.json",
                                  const std::string& context = "context.json") {
  return {cmd, "-m", f(dir, model), "-l", f(dir, lexicon), "-c", f(dir, context), "-t", f(dir, tree)};
}

std::string scratch(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / ("cogsem_cli_" + name);
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"validate"}).code, 2);
}

TEST(Cli, Validate) {
  auto ok = run({"validate", f("validate", "consistent.json")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("valid"), std::string::npos);
  auto bad = run({"validate", f("validate", "dress.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("invalid"), std::string::npos);
  auto structured = run({"validate", f("validate", "axiom.json"), "--format", "structured"});
  EXPECT_EQ(structured.code, 1);
  EXPECT_FALSE(nlohmann::json::parse(structured.out).at("axiom").empty());
  EXPECT_EQ(run({"validate", f("validate", "missing.json")}).code, 2);
}

TEST(Cli, EvalVerdicts) {
  auto t = run(sentence("eval", "tom_ran", "model_T.json"));
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.out.rfind("verdict: T\n", 0), 0u) << t.out;
  auto u = run(sentence("eval", "tom_ran", "model_U.json"));
  EXPECT_EQ(u.out.rfind("verdict: U\n", 0), 0u) << u.out;
  auto s = run([] {
    auto a = sentence("eval", "trees", "model_most.json", "tree_most.json");
    a.insert(a.end(), {"--most", "0.9", "--format", "structured", "--logic", "lukasiewicz"});
    return a;
  }());
  EXPECT_EQ(s.code, 0);
  auto j = nlohmann::json::parse(s.out);
  EXPECT_EQ(j.at("verdict"), "F");
  EXPECT_EQ(j.at("logic"), "lukasiewicz");
}

TEST(Cli, OptionValidation) {
  auto bad_logic = sentence("eval", "tom_ran", "model_T.json");
  bad_logic.insert(bad_logic.end(), {"--logic", "fuzzy"});
  EXPECT_EQ(run(bad_logic).code, 2);
  for (const char* most : {"0", "1", "-0.5", "abc"}) {
    auto a = sentence("eval", "tom_ran", "model_T.json");
    a.insert(a.end(), {"--most", most});
    EXPECT_EQ(run(a).code, 2) << most;
  }
}

TEST(Cli, InterpretAlwaysReports) {
  auto r = run(sentence("interpret", "hamlet", "model.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("effective: no"), std::string::npos);
  auto e = run(sentence("eval", "hamlet", "model.json", "tree.json", "lexicon.json", "context.json"));
  EXPECT_EQ(e.code, 0);  // declared a normal phrase: nothing to decide
}

TEST(Cli, NotEffectiveSentence) {
  auto r = run(sentence("eval", "tom_ran", "model_T.json", "tree.json", "lexicon.json", "context_open.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run(sentence("interpret", "tom_ran", "model_T.json", "tree.json", "lexicon.json", "context_open.json")).code, 0);
}

TEST(Cli, InputErrors) {
  auto tree = scratch("tree.json", R"({"version": 1, "tree": ["Zebedee", "ran"]})");
  auto unknown = run({"eval", "-m", f("tom_ran", "model_T.json"), "-l", f("tom_ran", "lexicon.json"), "-c",
                      f("tom_ran", "context.json"), "-t", tree});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("Zebedee"), std::string::npos);

  auto broken = scratch("broken.json", "{\"version\": 1,");
  auto syntax = run({"validate", broken});
  EXPECT_EQ(syntax.code, 2);
  EXPECT_NE(syntax.err.find(broken + ":"), std::string::npos) << syntax.err;
}

TEST(Cli, RefusesInconsistentModels) {
  auto r = run({"interpret", "-m", f("validate", "dress.json"), "-l", f("validate", "lexicon.json"), "-c",
                f("validate", "context.json"), "-t", f("validate", "tree.json")});
  EXPECT_EQ(r.code, 1);
}
