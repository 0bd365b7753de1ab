#include <gtest/gtest.h>

#include "cogsem/element.hpp"

using namespace cogsem;

namespace {

Element c(std::vector<ObsId> ids) { return Element::composite(Composite(std::move(ids))); }

}  // namespace

TEST(Element, SetsAreSortedAndDeduplicated) {
  Element a = Element::set({c({2}), c({1}), c({2})});
  Element b = Element::set({c({1}), c({2})});
  EXPECT_EQ(a, b);
  EXPECT_TRUE(identical(a, b));
  EXPECT_EQ(a.as_set()->items.size(), 2u);
}

TEST(Element, SequencesKeepOrder) {
  EXPECT_NE(Element::sequence({c({1}), c({2})}), Element::sequence({c({2}), c({1})}));
}

TEST(Element, RelationsCheckArity) {
  EXPECT_THROW(Element::relation(2, {ElementSeq{{c({1})}}}), std::invalid_argument);
  Element r = Element::relation(1, {ElementSeq{{c({2})}}, ElementSeq{{c({1})}}, ElementSeq{{c({2})}}});
  EXPECT_EQ(r.as_relation()->seqs.size(), 2u);
}

TEST(Element, AnnotationsAreNotIdentity) {
  std::vector<ElementSeq> seqs{ElementSeq{{c({1})}}};
  EXPECT_EQ(Element::relation(1, seqs, {TruthKind::observational}),
            Element::relation(1, seqs, {TruthKind::mental, ProductKind::sense, true}));
}

TEST(Element, KindsOrderBeforeContent) {
  EXPECT_LT(c({9}), Element::set({}));
  EXPECT_LT(Element::string("a"), Element::string("b"));
  EXPECT_NE(Element::set({c({1})}), c({1}));
}

TEST(Element, Emptiness) {
  EXPECT_TRUE(c({}).is_empty());
  EXPECT_TRUE(Element::set({}).is_empty());
  EXPECT_TRUE(Element::relation(2, {}).is_empty());
  EXPECT_FALSE(Element::set({c({})}).is_empty());
  EXPECT_FALSE(Element::string("").is_empty());
}

TEST(Element, ObservationsOfCollectsEverything) {
  Element r = Element::relation(2, {ElementSeq{{c({1}), Element::set({c({4}), c({2})})}}});
  EXPECT_EQ(observations_of(r), Composite({1, 2, 4}));
  EXPECT_TRUE(observations_of(Element::string("x")).empty());
}

TEST(Element, RelationView) {
  Relation r = relation_view(Element::set({c({1}), c({2})}));
  EXPECT_EQ(r.arity, 1u);
  EXPECT_EQ(r.seqs.size(), 2u);
  EXPECT_THROW(relation_view(c({1})), std::invalid_argument);
}

TEST(Element, DomainItems) {
  EXPECT_EQ(domain_items(Element::set({c({1}), c({2})})).size(), 2u);
  EXPECT_EQ(domain_items(c({1})), std::vector<Element>{c({1})});
  EXPECT_TRUE(domain_items(c({})).empty());
}
