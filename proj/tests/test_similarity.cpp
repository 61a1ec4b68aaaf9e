#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "wssim/similarity.hpp"

using namespace wssim;
using wssim::testing::city_weather;
using wssim::testing::make_op;

namespace {

const Operation& op(const Collection& c, std::string_view id) { return *c.find(id); }

}  // namespace

TEST(SimilarityKindTest, DirectednessFollowsSymmetry) {
    EXPECT_FALSE(is_directed(SimilarityKind::Full));
    EXPECT_TRUE(is_directed(SimilarityKind::Partial));
    EXPECT_TRUE(is_directed(SimilarityKind::Excess));
    EXPECT_FALSE(is_directed(SimilarityKind::Relation));
}

TEST(SimilarityKindTest, NamesRoundTrip) {
    for (auto kind : kAllSimilarityKinds) { EXPECT_EQ(parse_similarity_kind(to_string(kind)), kind); }
    EXPECT_FALSE(parse_similarity_kind("Full"));
    EXPECT_FALSE(parse_similarity_kind(""));
}

TEST(FullSimTest, CityWeather) {
    const auto c = city_weather();
    EXPECT_TRUE(full_sim(op(c, "o1"), op(c, "o2")));
    EXPECT_TRUE(full_sim(op(c, "o2"), op(c, "o1")));
    EXPECT_FALSE(full_sim(op(c, "o4"), op(c, "o5")));  // ZIP vs CITYNAME inputs
}

TEST(FullSimTest, ReflexiveOnlyWithInputs) {
    const auto c = city_weather();
    for (const auto& o : c.operations()) EXPECT_TRUE(full_sim(o, o)) << o.id;
    const auto no_inputs = make_op("x", {}, {"A"});
    EXPECT_FALSE(full_sim(no_inputs, no_inputs));
}

TEST(PartialSimTest, CityWeather) {
    const auto c = city_weather();
    EXPECT_TRUE(partial_sim(op(c, "o3"), op(c, "o1")));   // o1 is partially similar to o3
    EXPECT_FALSE(partial_sim(op(c, "o1"), op(c, "o3")));
    for (const auto& o : c.operations()) EXPECT_FALSE(partial_sim(o, o)) << o.id;
}

TEST(PartialSimTest, EqualOutputsNeverQualify) {
    const auto a = make_op("a", {"X"}, {"A", "B"});
    const auto b = make_op("b", {"X"}, {"A", "B"});
    EXPECT_FALSE(partial_sim(a, b));
    EXPECT_FALSE(excess_sim(a, b));
}

TEST(ExcessSimTest, CityWeather) {
    const auto c = city_weather();
    EXPECT_TRUE(excess_sim(op(c, "o5"), op(c, "o6")));  // o6 is similar to o5 with excess
    EXPECT_FALSE(excess_sim(op(c, "o6"), op(c, "o5")));
    for (const auto& o : c.operations()) EXPECT_FALSE(excess_sim(o, o)) << o.id;
}

TEST(ExcessSimTest, InputContainmentIsNonStrict) {
    const auto base = make_op("base", {"A", "B"}, {"X"});
    EXPECT_TRUE(excess_sim(base, make_op("same_inputs", {"A", "B"}, {"X", "Y"})));
    EXPECT_TRUE(excess_sim(base, make_op("fewer_inputs", {"A"}, {"X", "Y"})));
    EXPECT_TRUE(excess_sim(base, make_op("no_inputs", {}, {"X", "Y"})));
    EXPECT_FALSE(excess_sim(base, make_op("other_input", {"A", "C"}, {"X", "Y"})));
}

TEST(RelationSimTest, CityWeather) {
    const auto c = city_weather();
    EXPECT_TRUE(relation_sim(op(c, "o4"), op(c, "o5")));
    EXPECT_TRUE(relation_sim(op(c, "o5"), op(c, "o4")));
    EXPECT_FALSE(relation_sim(op(c, "o1"), op(c, "o1")));
}

TEST(RelationSimTest, EmptyInputsAreDisjoint) {
    EXPECT_TRUE(relation_sim(make_op("a", {}, {"A"}), make_op("b", {}, {"A"})));
    EXPECT_FALSE(full_sim(make_op("a", {}, {"A"}), make_op("b", {}, {"A"})));
}

TEST(EvaluateTest, Dispatches) {
    const auto c = city_weather();
    EXPECT_TRUE(evaluate(SimilarityKind::Full, op(c, "o1"), op(c, "o2")));
    EXPECT_FALSE(evaluate(SimilarityKind::Relation, op(c, "o1"), op(c, "o1")));
    EXPECT_TRUE(evaluate(SimilarityKind::Partial, op(c, "o3"), op(c, "o1")));
    EXPECT_TRUE(evaluate(SimilarityKind::Excess, op(c, "o5"), op(c, "o6")));
    EXPECT_TRUE(evaluate(SimilarityKind::Relation, op(c, "o4"), op(c, "o5")));
}

TEST(SetRelationsTest, Basics) {
    const auto ab = make_parameter_set({"A", "B"});
    const auto a = make_parameter_set({"A"});
    const ParameterSet none;
    EXPECT_TRUE(intersects(ab, a));
    EXPECT_FALSE(intersects(ab, none));
    EXPECT_TRUE(includes(ab, a));
    EXPECT_TRUE(includes(ab, ab));
    EXPECT_TRUE(includes(ab, none));
    EXPECT_TRUE(strictly_includes(ab, a));
    EXPECT_FALSE(strictly_includes(ab, ab));
    EXPECT_FALSE(strictly_includes(a, ab));
}

TEST(ParameterNameTest, MatchingIsExactAfterTrim) {
    EXPECT_EQ(ParameterName("  ZIP\t"), ParameterName("ZIP"));
    EXPECT_NE(ParameterName("Zip"), ParameterName("ZIP"));
    EXPECT_THROW(ParameterName("   "), std::invalid_argument);
}
