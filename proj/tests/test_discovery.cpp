#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "wssim/discovery.hpp"
#include "wssim/error.hpp"

using namespace wssim;
using wssim::testing::city_weather;
using wssim::testing::make_op;

namespace {

std::vector<std::string> ids_at(const std::vector<MatchResult>& results, MatchLevel level) {
    std::vector<std::string> ids;
    for (const auto& r : results)
        if (r.level == level) ids.push_back(r.operation_id);
    return ids;
}

using Ids = std::vector<std::string>;

}  // namespace

TEST(RequestTest, EmptyGoalRejected) {
    EXPECT_THROW(Request(make_parameter_set({"ZIP"}), {}), EmptyGoalError);
}

TEST(MatchLevelTest, NamesRoundTrip) {
    for (auto level : {MatchLevel::Full, MatchLevel::Excess, MatchLevel::Partial, MatchLevel::Relation})
        EXPECT_EQ(parse_match_level(to_string(level)), level);
    EXPECT_FALSE(parse_match_level("exact"));
}

TEST(MatchRequestTest, FullSelectsBothWeatherOperations) {
    const Request r(make_parameter_set({"CITYNAME", "ZIP"}), make_parameter_set({"WEATHERREPORT"}));
    const auto results = match_request(r, city_weather(), MatchLevel::Full);
    EXPECT_EQ(ids_at(results, MatchLevel::Full), (Ids{"o4", "o5"}));
    EXPECT_EQ(results.size(), 2u);
    for (const auto& m : results) {
        EXPECT_TRUE(m.surplus_outputs.empty());
        EXPECT_TRUE(m.missing_outputs.empty());
    }
}

TEST(MatchRequestTest, ExcessWhenFullCandidatesAreGone) {
    const Request r(make_parameter_set({"CITYNAME", "ZIP"}), make_parameter_set({"WEATHERREPORT"}));
    const auto results = match_request(r, city_weather().without({"o4", "o5"}), MatchLevel::Excess);
    ASSERT_EQ(results.size(), 1u);
    EXPECT_EQ(results[0].operation_id, "o6");
    EXPECT_EQ(results[0].level, MatchLevel::Excess);
    EXPECT_EQ(results[0].surplus_outputs, make_parameter_set({"SUBSCRIPTION"}));
    EXPECT_TRUE(results[0].missing_outputs.empty());
}

TEST(MatchRequestTest, RelationWithZipOnly) {
    const Request r(make_parameter_set({"ZIP"}), make_parameter_set({"WEATHERREPORT"}));
    const auto c = city_weather().without({"o4"});
    const auto results = match_request(r, c, MatchLevel::Relation);
    ASSERT_EQ(results.size(), 1u);
    EXPECT_EQ(results[0].operation_id, "o5");
    EXPECT_EQ(results[0].level, MatchLevel::Relation);
    EXPECT_EQ(results[0].unmet_inputs, make_parameter_set({"CITYNAME"}));
    // Nothing above Relation.
    EXPECT_TRUE(match_request(r, c, MatchLevel::Partial).empty());
}

TEST(MatchRequestTest, PartialReportsMissingOutputs) {
    const Request r(make_parameter_set({"ZIP"}), make_parameter_set({"CITYNAME", "LONGITUDE", "TIMEZONE"}));
    const auto results = match_request(r, city_weather(), MatchLevel::Partial);
    EXPECT_EQ(ids_at(results, MatchLevel::Partial), (Ids{"o1", "o2"}));
    for (const auto& m : results) {
        EXPECT_FALSE(m.missing_outputs.empty());
        EXPECT_TRUE(m.surplus_outputs.empty());
    }
}

TEST(MatchRequestTest, LevelsAreOrderedAndSortedWithin) {
    const Collection c({make_op("full", {"A"}, {"X"}), make_op("excess_big", {"A"}, {"X", "Y", "Z"}),
                        make_op("excess_small", {"A"}, {"X", "Y"}), make_op("relation", {"B"}, {"X"})});
    const Request r(make_parameter_set({"A"}), make_parameter_set({"X"}));
    const auto results = match_request(r, c);
    ASSERT_EQ(results.size(), 4u);
    EXPECT_EQ(results[0].operation_id, "full");
    EXPECT_EQ(results[1].operation_id, "excess_small");
    EXPECT_EQ(results[2].operation_id, "excess_big");
    EXPECT_EQ(results[3].operation_id, "relation");
}

TEST(MatchRequestTest, InvariantsPerLevel) {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 50; ++round) {
        const auto c = wssim::testing::random_collection(rng, 80, 8, 3);
        auto goal = wssim::testing::random_names(rng, 8, 3);
        if (goal.empty()) goal = make_parameter_set({"P0"});
        const Request r(wssim::testing::random_names(rng, 8, 3), goal);
        for (const auto& m : match_request(r, c)) {
            switch (m.level) {
                case MatchLevel::Full:
                    EXPECT_TRUE(m.surplus_outputs.empty() && m.missing_outputs.empty());
                    break;
                case MatchLevel::Excess:
                    EXPECT_TRUE(!m.surplus_outputs.empty() && m.missing_outputs.empty());
                    break;
                case MatchLevel::Partial:
                    EXPECT_TRUE(m.surplus_outputs.empty() && !m.missing_outputs.empty());
                    break;
                case MatchLevel::Relation:
                    EXPECT_EQ(m.unmet_inputs, c.find(m.operation_id)->inputs);
                    break;
            }
        }
    }
}

TEST(ExactMatchesTest, SameInputsAndOutputs) {
    const Request r(make_parameter_set({"ZIP"}), make_parameter_set({"CITYNAME"}));
    EXPECT_EQ(exact_matches(r, city_weather()), (Ids{"o1"}));
    const Request none(make_parameter_set({"CITYNAME", "ZIP"}), make_parameter_set({"WEATHERREPORT"}));
    EXPECT_TRUE(exact_matches(none, city_weather()).empty());
}

TEST(SuggestBridgeTest, CityNameFromZip) {
    const Request r(make_parameter_set({"ZIP"}), make_parameter_set({"WEATHERREPORT"}));
    const auto c = city_weather().without({"o4"});
    const auto results = match_request(r, c);
    ASSERT_EQ(results.size(), 1u);
    EXPECT_EQ(suggest_bridge(results[0], c, r), (Ids{"o1"}));
}

TEST(SuggestBridgeTest, RegionMakesSecondBridgeInvocable) {
    const Request r(make_parameter_set({"ZIP", "GEOGRAPHICALREGION"}), make_parameter_set({"WEATHERREPORT"}));
    MatchResult m{"o5", MatchLevel::Relation, {}, {}, make_parameter_set({"CITYNAME"})};
    EXPECT_EQ(suggest_bridge(m, city_weather(), r), (Ids{"o1", "o2"}));
}

TEST(SuggestBridgeTest, UnproducibleInputs) {
    const Request r(make_parameter_set({"ZIP"}), make_parameter_set({"WEATHERREPORT"}));
    MatchResult m{"o5", MatchLevel::Relation, {}, {}, make_parameter_set({"PASSPORT"})};
    EXPECT_TRUE(suggest_bridge(m, city_weather(), r).empty());
}

TEST(SuggestBridgeTest, FallsBackToRicherProducers) {
    // Only o3 produces CITYNAME once o1 and o2 are gone.
    const Request r(make_parameter_set({"ZIP"}), make_parameter_set({"WEATHERREPORT"}));
    MatchResult m{"o5", MatchLevel::Relation, {}, {}, make_parameter_set({"CITYNAME"})};
    EXPECT_EQ(suggest_bridge(m, city_weather().without({"o1", "o2"}), r), (Ids{"o3"}));
}

TEST(SuggestBridgeTest, RequiresRelationLevel) {
    const Request r(make_parameter_set({"ZIP"}), make_parameter_set({"WEATHERREPORT"}));
    MatchResult m{"o4", MatchLevel::Full, {}, {}, {}};
    EXPECT_THROW(suggest_bridge(m, city_weather(), r), std::invalid_argument);
}
