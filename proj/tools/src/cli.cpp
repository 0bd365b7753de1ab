#include "cogsem_cli/cli.hpp"

#include <CLI11.hpp>

#include "cogsem/interp.hpp"
#include "cogsem/io.hpp"
#include "cogsem/report.hpp"
#include "cogsem/truth.hpp"

namespace cogsem::cli {

namespace {

struct Inputs {
  std::string model, lexicon, context, tree;
};

struct Loaded {
  CognitiveModel model;
  Lexicon lexicon;
  Context context;
  DepTree tree;
};

void add_inputs(CLI::App& cmd, Inputs& in) {
  cmd.add_option("-m,--model", in.model, "model file")->required();
  cmd.add_option("-l,--lexicon", in.lexicon, "lexicon file")->required();
  cmd.add_option("-c,--context", in.context, "context file")->required();
  cmd.add_option("-t,--tree", in.tree, "dependency tree file")->required();
}

void add_format(CLI::App& cmd, std::string& format) {
  cmd.add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}))
      ->default_val("text");
}

// Interpretation and evaluation need a model whose observations are consistent.
bool usable(const CognitiveModel& m, std::ostream& err) {
  auto v = audit(m);
  if (v.empty()) return true;
  err << "error: model violates observation consistency; run 'validate' for details\n";
  return false;
}

Loaded load(const Inputs& in) {
  Loaded l;
  l.model = load_model(in.model);
  l.lexicon = load_lexicon(in.lexicon, l.model);
  l.context = load_context(in.context, l.model);
  l.tree = load_tree(in.tree);
  return l;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cognitive-model semantics: model validation, interpretation and truth evaluation"};
  app.name("cogsem");
  app.require_subcommand(1);

  std::string model_path, format = "text", logic = "kleene";
  std::optional<double> most;
  Inputs in;

  auto* validate = app.add_subcommand("validate", "check observation consistency of a model");
  validate->add_option("model", model_path, "model file")->required();
  add_format(*validate, format);

  auto* interpret_cmd = app.add_subcommand("interpret", "list the meanings of every tree node");
  add_inputs(*interpret_cmd, in);
  add_format(*interpret_cmd, format);

  auto* eval = app.add_subcommand("eval", "truth value of a sentence");
  add_inputs(*eval, in);
  add_format(*eval, format);
  eval->add_option("--logic", logic, "kleene or lukasiewicz")
      ->check(CLI::IsMember({"kleene", "lukasiewicz"}))
      ->default_val("kleene");
  eval->add_option("--most", most, "threshold for 'most' quantifiers")
      ->check(CLI::Range(0.0, 1.0));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Exit::ok : Exit::bad_input;
  }
  if (most && (*most <= 0.0 || *most >= 1.0)) {
    err << "error: --most must lie strictly between 0 and 1\n";
    return Exit::bad_input;
  }
  const Format fmt = *parse_format(format);

  try {
    if (*validate) {
      CognitiveModel m = load_model(model_path);
      auto v = audit(m);
      out << render_violations(v, m, fmt);
      return v.empty() ? Exit::ok : Exit::rejected;
    }

    Loaded l = load(in);
    if (!usable(l.model, err)) return Exit::rejected;
    Interpretation interp = interpret(l.tree, l.lexicon, l.context, l.model);

    if (*interpret_cmd) {
      out << render_interpretation(interp, l.model, fmt);
      return Exit::ok;
    }

    EvalOptions opts;
    opts.logic = *parse_logic(logic);
    opts.most_threshold = most ? most : l.context.most_threshold;
    SentenceResult r = eval_sentence(interp, l.model, opts);
    out << render_verdict(r, l.model, opts, fmt);
    return Exit::ok;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return Exit::bad_input;
  } catch (const UnknownToken& e) {
    err << "error: " << e.what() << "\n";
    return Exit::bad_input;
  } catch (const NotEffective& e) {
    err << "error: " << e.what() << "\n";
    return Exit::rejected;
  } catch (const InterpretError& e) {
    err << "error: uninterpretable node " << e.what() << "\n";
    return Exit::rejected;
  } catch (const EvaluationError& e) {
    err << "error: " << e.what() << "\n";
    return Exit::rejected;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return Exit::bad_input;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Exit::rejected;
  }
}

}  // namespace cogsem::cli
