#include <gtest/gtest.h>

#include <set>

#include "cogsem/param_value.hpp"

using cogsem::ParamValue;
using cogsem::TagMismatch;

TEST(ParamValue, ComparesWithinATag) {
  EXPECT_EQ(ParamValue::integer(1).compare(ParamValue::integer(2)), std::strong_ordering::less);
  EXPECT_EQ(ParamValue::symbol("b").compare(ParamValue::symbol("a")), std::strong_ordering::greater);
  EXPECT_EQ(ParamValue::tuple({1, 2}).compare(ParamValue::tuple({1, 2})), std::strong_ordering::equal);
}

TEST(ParamValue, CrossTagComparisonThrows) {
  EXPECT_THROW((void)ParamValue::integer(1).compare(ParamValue::symbol("1")), TagMismatch);
  EXPECT_THROW((void)ParamValue().compare(ParamValue::integer(0)), TagMismatch);
}

TEST(ParamValue, EqualityIsRecordIdentity) {
  EXPECT_NE(ParamValue::integer(1), ParamValue::symbol("1"));
  EXPECT_EQ(ParamValue(), ParamValue());
  std::set<ParamValue> mixed{ParamValue::symbol("a"), ParamValue::integer(3), ParamValue()};
  EXPECT_EQ(mixed.size(), 3u);
  EXPECT_TRUE(mixed.begin()->is_empty());
}

TEST(ParamValue, AccessorsCheckTheTag) {
  EXPECT_EQ(ParamValue::integer(4).as_int(), 4);
  EXPECT_THROW((void)ParamValue::integer(4).as_symbol(), TagMismatch);
  EXPECT_THROW((void)ParamValue::symbol("x").as_tuple(), TagMismatch);
}

TEST(ParamValue, Printing) {
  EXPECT_EQ(ParamValue().to_string(), "_");
  EXPECT_EQ(ParamValue::integer(-3).to_string(), "-3");
  EXPECT_EQ(ParamValue::symbol("red").to_string(), "red");
}
