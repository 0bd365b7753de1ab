#include <gtest/gtest.h>

#include "cogsem/interp.hpp"
#include "support.hpp"

using namespace cogsem;
using namespace cogsem::testing;

namespace {

Element c(std::vector<ObsId> ids) { return Element::composite(Composite(std::move(ids))); }

Element pairs() {
  return Element::relation(2, {ElementSeq{{c({1, 2}), c({5})}}, ElementSeq{{c({3}), c({6})}},
                               ElementSeq{{c({1, 2, 3}), c({5})}}});
}

}  // namespace

TEST(ApplyBasic, MatchKinds) {
  std::vector<Element> one{c({2})};
  EXPECT_EQ(apply_basic(Match::weak, one, 1, pairs()).as_relation()->seqs.size(), 2u);
  std::vector<Element> wide{c({1, 2})};
  EXPECT_EQ(apply_basic(Match::strong, wide, 1, pairs()).as_relation()->seqs.size(), 2u);
  EXPECT_EQ(apply_basic(Match::exact, wide, 1, pairs()).as_relation()->seqs.size(), 1u);
  std::vector<Element> two{c({1}), c({3})};
  EXPECT_EQ(apply_basic(Match::weak, two, 1, pairs()).as_relation()->seqs.size(), 1u);
  EXPECT_EQ(apply_quantifier(Match::weak, two, 1, pairs()).as_relation()->seqs.size(), 3u);
  EXPECT_THROW(apply_basic(Match::weak, one, 3, pairs()), std::invalid_argument);
}

TEST(ApplyBasic, SetsStaySets) {
  Element s = Element::set({c({1}), c({2}), c({4})});
  std::vector<Element> a{c({1, 2})};
  Element out = apply_basic(Match::strong, std::vector<Element>{c({1})}, 1, s);
  ASSERT_TRUE(out.as_set());
  EXPECT_EQ(out.as_set()->items.size(), 1u);
  EXPECT_EQ(apply_basic(Match::weak, a, 1, s).as_set()->items.size(), 2u);
}

TEST(ApplyBasic, WeakNeedsComposites) {
  Element r = Element::relation(1, {ElementSeq{{Element::string("x")}}});
  std::vector<Element> a{c({1})};
  EXPECT_THROW(apply_basic(Match::weak, a, 1, r), std::invalid_argument);
  EXPECT_NO_THROW(apply_basic(Match::exact, a, 1, r));
}

TEST(ApplyOperation, ArityAndConnectives) {
  CognitiveModel m;
  Element x = c({1});
  Element y = c({2});
  const Element* two[] = {&x, &y};
  const Element* one[] = {&x};
  std::string why;
  EXPECT_FALSE(apply_operation(basic_op(Match::weak, 1), one, m, &why));
  EXPECT_FALSE(why.empty());
  auto conj = apply_operation(connective_op(ConnectiveId::conjunction), two, m);
  ASSERT_TRUE(conj);
  EXPECT_EQ(*conj, Element::sequence({x, y}));
  auto neg = apply_operation(connective_op(ConnectiveId::negation), one, m);
  ASSERT_TRUE(neg);
  EXPECT_EQ(*neg, Element::sequence({x}));

  OperationDef because{"because", ConnectiveOp{ConnectiveId::conjunction, std::string("cause")}};
  EXPECT_FALSE(apply_operation(because, two, m, &why));
}

TEST(Interpret, RedFlowersIsANormalPhrase) {
  auto l = load("red_flowers", "model.json", "lexicon.json", "context.json", "tree.json");
  ASSERT_EQ(l.interp.root().size(), 1u);
  EXPECT_TRUE(l.interp.effective());
  EXPECT_EQ(l.model.label(*element_of(l.interp.root()[0]->denotation)), "red-flowers");
  EXPECT_EQ(l.interp.order.front(), l.interp.tree.id);
}

TEST(Interpret, AmbiguousLeafIsNotEffective) {
  auto l = load("hamlet", "model.json", "lexicon.json", "context.json", "tree.json");
  EXPECT_EQ(l.interp.root().size(), 5u);
  EXPECT_EQ(l.interp.ambiguous_nodes(), std::vector<std::string>{"n0"});
  auto d = load("hamlet", "model.json", "lexicon.json", "context_directive.json", "tree.json");
  EXPECT_TRUE(d.interp.effective());
}

TEST(Interpret, ExplanationsMirrorTheTree) {
  auto l = load("tom_ran", "model_T.json", "lexicon.json", "context.json", "tree.json");
  ASSERT_EQ(l.interp.root().size(), 1u);
  const auto& root = *l.interp.root()[0];
  ASSERT_TRUE(root.explanation);
  EXPECT_EQ(root.explanation->node_id, l.interp.tree.id);
  EXPECT_EQ(root.explanation->sense, root.sense);
  EXPECT_TRUE(root.consistent);
  // Re-evaluating the sense recovers the denotation.
  EXPECT_TRUE(same_denotation(evaluate(*root.sense, l.model), root.denotation));
}

TEST(Interpret, UnknownWordsAndBadTrees) {
  auto base = fixture("tom_ran");
  CognitiveModel m = load_model(base / "model_T.json");
  Lexicon lex = load_lexicon(base / "lexicon.json", m);
  Context ctx = load_context(base / "context.json", m);
  EXPECT_THROW(interpret(DepTree::leaf("Zebedee"), lex, ctx, m), UnknownToken);
  DepTree dup = DepTree::node(DepTree::leaf("Tom"), DepTree::leaf("ran"));
  dup.children[0].id = "same";
  dup.children[1].id = "same";
  EXPECT_THROW(interpret(dup, lex, ctx, m), std::invalid_argument);
  EXPECT_THROW(interpret(DepTree::leaf("Tom", true), lex, ctx, m), InterpretError);
}

TEST(Instantiate, WrapsTheFormula) {
  CognitiveModel m;
  SensePtr f = leaf("R", pairs());
  SensePtr s = instantiate(f, 2, Element::set({c({5})}), Match::exact, m);
  EXPECT_EQ(s->args.at(1), f);
  EXPECT_EQ(s->op.basic()->var, 2);
  Denotation d = evaluate(*s, m);
  EXPECT_EQ(element_of(d)->as_relation()->seqs.size(), 2u);
  EXPECT_THROW(instantiate(f, 1, Element::set({}), Match::weak, m), std::invalid_argument);
  EXPECT_NE(instantiate(f, 2, Element::set({c({6})}), Match::exact, m)->key(), s->key());
}

TEST(Tree, IdsAndSurface) {
  DepTree t = DepTree::node(DepTree::leaf("red"), DepTree::leaf("flowers"));
  assign_ids(t);
  EXPECT_EQ(t.id, "n0");
  EXPECT_EQ(t.modifier().id, "n1");
  EXPECT_EQ(t.head().id, "n2");
  EXPECT_EQ(surface(t), "red flowers");
}
