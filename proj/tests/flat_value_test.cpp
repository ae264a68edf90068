#include <gtest/gtest.h>

#include <stdexcept>

#include "fvj/flat_value.hpp"

namespace fvj {
namespace {

const LaurentPoly kDelta = loop_factor();

TEST(NormalizeCensus, Examples) {
  EXPECT_EQ(normalize_census({2, 1}), FlatValue::single(1, kDelta * kDelta));
  EXPECT_EQ(normalize_census({3, 0}), FlatValue::single(0, kDelta * kDelta));
  EXPECT_EQ(normalize_census({1, 0}), FlatValue::single(0, LaurentPoly::constant(1)));
  EXPECT_EQ(normalize_census({0, 2}), FlatValue::single(2, LaurentPoly::constant(1)));
}

TEST(NormalizeCensus, RejectsEmptyAndNegative) {
  EXPECT_THROW(normalize_census({0, 0}), std::invalid_argument);
  EXPECT_THROW(normalize_census({-1, 1}), std::invalid_argument);
}

TEST(FlatValueOps, AddAndScale) {
  const auto one = LaurentPoly::constant(1);
  EXPECT_TRUE(fv_add(FlatValue::single(0, one), FlatValue::single(0, -one)).is_zero());
  EXPECT_EQ(fv_scale(LaurentPoly::monomial(1, 3), FlatValue::single(1, kDelta * kDelta)),
            FlatValue::single(1, (kDelta * kDelta).shifted(3)));
  const auto both = fv_add(FlatValue::single(1, kDelta), FlatValue::single(2, one));
  EXPECT_EQ(both.entries().size(), 2U);
  EXPECT_EQ(both.at(1), kDelta);
  EXPECT_EQ(both.at(2), one);
  EXPECT_TRUE(both.at(0).is_zero());
  EXPECT_TRUE(fv_scale(LaurentPoly{}, both).is_zero());
  EXPECT_EQ(-(-both), both);
}

TEST(Render, Text) {
  EXPECT_EQ(render(FlatValue::single(0, LaurentPoly::constant(1)), Format::text), "E^0: 1");
  EXPECT_EQ(render(FlatValue::single(1, kDelta * kDelta), Format::text), "E^1: a^-4 + 2 + a^4");
  EXPECT_EQ(render(FlatValue{}, Format::text), "0");
  const auto two = fv_add(FlatValue::single(2, LaurentPoly::constant(-1)), FlatValue::single(0, kDelta));
  EXPECT_EQ(render(two, Format::text), "E^0: -a^-2 - a^2\nE^2: -1");
}

TEST(Render, Json) {
  const auto v = FlatValue::single(1, kDelta);
  EXPECT_EQ(render(v, Format::json), R"({"1":{"-2":-1,"2":-1}})");
  EXPECT_EQ(render(FlatValue{}, Format::json), "{}");
  const auto big = FlatValue::single(0, LaurentPoly::monomial(BigInt(1) << 70, 0));
  EXPECT_EQ(render(big, Format::json), R"({"0":{"0":"1180591620717411303424"}})");
  EXPECT_EQ(parse_flat_value_json(render(big, Format::json)), big);
}

TEST(Render, JsonRejectsMalformed) {
  EXPECT_THROW(parse_flat_value_json("[1]"), std::invalid_argument);
  EXPECT_THROW(parse_flat_value_json(R"({"x":{}})"), std::invalid_argument);
  EXPECT_THROW(parse_flat_value_json(R"({"0":{"1":"abc"}})"), std::invalid_argument);
  EXPECT_THROW(parse_flat_value_json("{"), std::invalid_argument);
}

}  // namespace
}  // namespace fvj
