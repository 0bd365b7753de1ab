#include <gtest/gtest.h>

#include "cogsem/model.hpp"
#include "support.hpp"

using namespace cogsem;
using cogsem::testing::obs;

namespace {

// A ball rolling right along a line in the real world, a bystander, and a
// dream about the ball.
CognitiveModel rolling_ball() {
  std::vector<PrimitiveObservation> a;
  for (int t = 0; t < 4; ++t) a.push_back(obs("real", "ann", t, IntTuple{t}, "ball"));
  a.push_back(obs("real", "ann", 1, IntTuple{5}, "tree"));
  a.push_back(obs("dream", "ann", 1, IntTuple{1}, "ball", AcIm::imaginary));
  auto sub = obs("real", "bob", 2, IntTuple{7}, "cat", AcIm::actual, "garden");
  sub.world.labels.push_back("garden");
  a.push_back(sub);
  return CognitiveModel(a, {{"real", {1, {"garden"}}}, {"dream", {1, {}}}});
}

RegionMap trail(TimePoint s, TimePoint e) {
  RegionMap r;
  for (TimePoint t = s; t <= e; ++t) r[t] = {{t}};
  return r;
}

}  // namespace

TEST(Model, RejectsWrongSpaceDimension) {
  EXPECT_THROW(CognitiveModel({obs("real", "ann", 0, IntTuple{0, 0}, "x")}, {{"real", {1, {}}}}),
               std::invalid_argument);
}

TEST(Model, WorldsAndSubworlds) {
  auto m = rolling_ball();
  EXPECT_EQ(world_of(m, "real").size(), 6u);
  EXPECT_EQ(world_of(m, "dream").size(), 1u);
  EXPECT_EQ(subworld_of(m, "real", "garden").size(), 1u);
  EXPECT_TRUE(world_of(m, "nowhere").empty());
  EXPECT_EQ(m.actual().size(), 6u);
}

TEST(Model, ProcessFollowsTheRegionMap) {
  auto m = rolling_ball();
  Process p = process_at(m, "real", Segment(0, 3), trail(0, 3));
  EXPECT_EQ(p.members.size(), 4u);
  EXPECT_EQ(state_of(m, p, 2).size(), 1u);
  EXPECT_THROW(state_of(m, p, 9), std::out_of_range);
  EXPECT_EQ(process_at(m, "real", Segment(0, 3), trail(0, 3)), p);

  // The subworld observation at t=2 sits at 7, outside the trail.
  auto wide = trail(0, 3);
  wide[2].insert({7});
  EXPECT_EQ(process_at(m, "real", Segment(0, 3), wide).members.size(), 5u);
}

TEST(Model, ProcessNeedsEveryMoment) {
  auto m = rolling_ball();
  auto gap = trail(0, 3);
  gap.erase(2);
  EXPECT_THROW(process_at(m, "real", Segment(0, 3), gap), std::invalid_argument);
  RegionMap flat{{0, {{0, 0}}}};
  EXPECT_THROW(process_at(m, "real", Segment(0, 0), flat), std::invalid_argument);
}

TEST(Model, ObjectConditions) {
  auto m = rolling_ball();
  Process ball = process_at(m, "real", Segment(0, 3), trail(0, 3));
  m.add_process("ball", ball);
  RegionMap still;
  for (TimePoint t = 0; t < 4; ++t) still[t] = {{5}};
  Process tree = process_at(m, "real", Segment(0, 3), still);
  m.add_process("tree", tree);
  m.register_object({"ball", true});
  m.register_object({"tree", false});

  auto c = check_object_conditions(m, ball);
  EXPECT_TRUE(c.spatial_difference);
  EXPECT_TRUE(c.strict_boundary);
  EXPECT_TRUE(c.disjointness);
  EXPECT_TRUE(c.strict_start_end);
  EXPECT_FALSE(check_object_conditions(m, tree).strict_start_end);

  // A blob that half covers the ball's trail overlaps without containing it.
  RegionMap blob;
  for (TimePoint t = 0; t < 4; ++t) blob[t] = {{0}, {1}, {3}};
  m.add_process("blob", process_at(m, "real", Segment(0, 3), blob));
  m.register_object({"blob", false});
  auto after = check_object_conditions(m, ball);
  EXPECT_FALSE(after.disjointness);
  EXPECT_FALSE(check_object_conditions(m, *m.process("blob")).strict_boundary);
}

TEST(Model, UnknownObjectProcessIsRejected) {
  auto m = rolling_ball();
  EXPECT_THROW(m.register_object({"ghost", false}), std::invalid_argument);
}

TEST(Model, AuditSplitsViolationKinds) {
  std::vector<PrimitiveObservation> a{
      obs("real", "ann", 0, IntTuple{0}, "red"),  obs("real", "ann", 0, IntTuple{0}, "blue"),
      obs("real", "bob", 0, IntTuple{0}, "green"), obs("real", "cy", 0, IntTuple{0}, "red", AcIm::imaginary),
      obs("real", "dee", 0, IntTuple{0}, "red", AcIm::imaginary)};
  CognitiveModel m(a, {{"real", {1, {}}}});
  auto v = audit(m);
  EXPECT_FALSE(v.axiom.empty());
  EXPECT_FALSE(v.weak.empty());
  EXPECT_FALSE(v.strong.empty());
  // Strong pairs only involve actual observations.
  for (auto [i, j] : v.strong) {
    EXPECT_TRUE(m.observations()[i].actual());
    EXPECT_TRUE(m.observations()[j].actual());
  }
  EXPECT_TRUE(audit(rolling_ball()).empty());
}

TEST(Model, NamesAndLabels) {
  auto m = rolling_ball();
  m.name_observation(0, "first");
  EXPECT_EQ(m.observation_name(0), "first");
  EXPECT_EQ(m.observation_name(1), "#1");
  EXPECT_EQ(m.observation_by_name("first"), ObsId{0});

  Element e = Element::composite(Composite({0, 1}));
  m.add_element("pair", e);
  EXPECT_EQ(m.name_of(e), "pair");
  EXPECT_EQ(m.label(e), "pair");
  Element anon = Element::composite(Composite({1, 2}));
  EXPECT_FALSE(m.name_of(anon));
  EXPECT_EQ(m.label(anon), m.label(Element::composite(Composite({2, 1}))));
  EXPECT_NE(m.label(anon), m.label(Element::composite(Composite({1, 3}))));
}

TEST(Constancy, EqualAndDifferentFeatures) {
  // Three glimpses of one cup: same colour, different times.
  RepresentationProcedure psi = [](const Composite& c) -> std::optional<FeatureRepresentation> {
    if (c.empty()) return std::nullopt;
    return FeatureRepresentation{"cup", {{"colour", ParamValue::symbol(c.size() > 5 ? "blue" : "white")},
                                         {"when", ParamValue::integer(*c.begin())}}};
  };
  std::vector<Composite> c{Composite({0}), Composite({1}), Composite({2})};
  EXPECT_TRUE(check_constancy(c, psi, {"colour"}, {"when"}));
  EXPECT_FALSE(check_constancy({Composite({0}), Composite({0, 1})}, psi, {"colour"}, {"when"}));
  EXPECT_FALSE(check_constancy({Composite({0}), Composite({0, 1, 2, 3, 4, 5})}, psi, {"colour"}, {}));
  EXPECT_THROW(check_constancy({Composite()}, psi, {"colour"}, {}), std::invalid_argument);
  EXPECT_THROW(check_constancy(c, psi, {"size"}, {}), std::invalid_argument);

  FeatureRanges ranges{{"colour", {ParamValue::symbol("white"), ParamValue::symbol("blue")}}};
  EXPECT_TRUE(check_constancy({Composite({0}), Composite({0, 1, 2, 3, 4, 5})}, psi, {"colour"}, {}, ranges));
  FeatureRanges narrow{{"colour", {ParamValue::symbol("white")}}};
  EXPECT_FALSE(check_constancy({Composite({0}), Composite({0, 1, 2, 3, 4, 5})}, psi, {"colour"}, {}, narrow));
}
