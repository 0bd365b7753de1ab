#include "support.hpp"

namespace cogsem::testing {

std::filesystem::path fixture(const std::string& rel) {
  return std::filesystem::path(COGSEM_FIXTURES) / rel;
}

ResolutionPower eye() {
  return ResolutionPower{"eye", {{"t", "time"}, {"s1", "place"}}, {{"s0", "point"}}, {{"seen", "scene"}}};
}

PrimitiveObservation obs(std::string world, std::string label, std::int64_t t,
                         std::optional<IntTuple> point, std::string result, AcIm ac, std::string place) {
  PrimitiveObservation a;
  a.world.labels = {std::move(world)};
  a.observer.labels = {std::move(label)};
  a.observer.power = eye();
  a.observer.state = {ParamValue::integer(t), ParamValue::symbol(std::move(place))};
  a.observer.ac_im = ac;
  a.resolution_point = {point ? ParamValue::tuple(*point) : ParamValue{}};
  a.result = ParamValue::symbol(std::move(result));
  return a;
}

SensePtr leaf(std::string name, Element e) {
  return make_leaf_sense(DenotationRef{std::move(name), std::make_shared<const Element>(std::move(e)), 0});
}

SensePtr leaf(OperationDef op) {
  std::string name = op.name;
  return make_leaf_sense(DenotationRef{std::move(name), std::move(op), 0});
}

SensePtr apply_op(const OperationDef& op, SensePtr domain, SensePtr body) {
  auto s = std::make_shared<Sense>();
  s->kind = Sense::Kind::apply;
  s->op = op;
  s->level = op.level;
  s->modifier = domain;
  s->head = body;
  s->args = {std::move(domain), std::move(body)};
  s->seal();
  return s;
}

SensePtr unary(const OperationDef& op, SensePtr arg) {
  auto s = std::make_shared<Sense>();
  s->kind = Sense::Kind::apply;
  s->op = op;
  s->level = op.level;
  s->modifier = arg;
  s->head = leaf(op);
  s->args = {std::move(arg)};
  s->seal();
  return s;
}

SensePtr binary(const OperationDef& op, SensePtr left, SensePtr right) {
  auto s = std::make_shared<Sense>();
  s->kind = Sense::Kind::apply;
  s->op = op;
  s->level = op.level;
  s->modifier = right;
  s->head = left;
  s->args = {std::move(left), std::move(right)};
  s->from_partial = true;
  s->seal();
  return s;
}

OperationDef basic_op(Match m, int var) {
  return OperationDef{"f" + std::to_string(var), BasicOp{m, var}, ArgLevel::denotation};
}

OperationDef quantifier_op(QuantSort s, Match m, int var, double theta) {
  return OperationDef{std::string(to_string(s)), QuantifierOp{s, m, var, theta}, ArgLevel::denotation};
}

OperationDef connective_op(ConnectiveId c) {
  return OperationDef{std::string(to_string(c)), ConnectiveOp{c, std::nullopt}, ArgLevel::denotation};
}

Loaded load(const std::string& dir, const std::string& model, const std::string& lexicon,
            const std::string& context, const std::string& tree) {
  auto base = fixture(dir);
  CognitiveModel m = load_model(base / model);
  Lexicon lex = load_lexicon(base / lexicon, m);
  Context ctx = load_context(base / context, m);
  DepTree t = load_tree(base / tree);
  Interpretation in = interpret(std::move(t), lex, ctx, m);
  return Loaded{std::move(m), std::move(lex), std::move(ctx), std::move(in)};
}

Truth verdict(const std::string& dir, const std::string& model, const std::string& lexicon,
              const std::string& context, const std::string& tree, EvalOptions opts) {
  auto l = load(dir, model, lexicon, context, tree);
  if (!opts.most_threshold) opts.most_threshold = l.context.most_threshold;
  return eval_sentence(l.interp, l.model, opts).value;
}

std::vector<PrimitiveObservation> random_corpus(std::mt19937& rng, std::size_t n) {
  auto pick = [&](int k) { return std::uniform_int_distribution<int>(0, k - 1)(rng); };
  const char* worlds[] = {"real", "dream"};
  const char* labels[] = {"ann", "bob", "cy"};
  const char* results[] = {"red", "blue"};
  std::vector<PrimitiveObservation> out;
  for (std::size_t i = 0; i < n; ++i) {
    auto a = obs(worlds[pick(2)], labels[pick(3)], pick(2), IntTuple{pick(2)}, results[pick(2)],
                 pick(3) == 0 ? AcIm::imaginary : AcIm::actual);
    if (pick(4) == 0) a.world.labels.push_back("sub");
    out.push_back(std::move(a));
  }
  return out;
}

namespace {

template <class Offends>
std::vector<ViolationPair> naive(const std::vector<PrimitiveObservation>& a, Offends offends) {
  std::vector<ViolationPair> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (offends(a[i], a[j])) out.push_back({i, j});
  return out;
}

}  // namespace

std::vector<ViolationPair> naive_axiom(const std::vector<PrimitiveObservation>& a) {
  return naive(a, [](const PrimitiveObservation& x, const PrimitiveObservation& y) {
    return x.world == y.world && x.observer == y.observer && x.resolution_point == y.resolution_point &&
           x.result != y.result;
  });
}

std::vector<ViolationPair> naive_weak(const std::vector<PrimitiveObservation>& a) {
  return naive(a, [](const PrimitiveObservation& x, const PrimitiveObservation& y) {
    return x.world == y.world && x.observer.power == y.observer.power &&
           x.observer.state == y.observer.state && x.observer.ac_im == y.observer.ac_im &&
           x.resolution_point == y.resolution_point && x.observer.labels != y.observer.labels &&
           x.result != y.result;
  });
}

std::vector<ViolationPair> naive_strong(const std::vector<PrimitiveObservation>& a) {
  return naive(a, [](const PrimitiveObservation& x, const PrimitiveObservation& y) {
    return x.world.labels.front() == y.world.labels.front() && x.observer.state == y.observer.state &&
           x.observer.ac_im == y.observer.ac_im && x.observer.labels != y.observer.labels;
  });
}

}  // namespace cogsem::testing
