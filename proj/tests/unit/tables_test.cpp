#include <gtest/gtest.h>

#include "trisat/tables.hpp"

using namespace trisat;

TEST(FixtureIds, RoundTrip) {
  ASSERT_EQ(all_fixture_ids().size(), 6u);
  for (FixtureId id : all_fixture_ids()) EXPECT_EQ(parse_fixture_id(to_string(id)), id);
  EXPECT_FALSE(parse_fixture_id("nope").has_value());
}

class TableReproduction : public ::testing::TestWithParam<FixtureId> {};

TEST_P(TableReproduction, NoMismatches) {
  const TableReport report = reproduce_table(GetParam());
  EXPECT_EQ(report.mismatches(), 0) << report.to_json(false).dump(2);
  EXPECT_FALSE(report.rows.empty());
  for (const auto& row : report.rows) EXPECT_GT(row.samples, 0) << row.row;
  const auto j = report.to_json(true);
  EXPECT_EQ(j["id"], to_string(GetParam()));
  EXPECT_EQ(j["rows"].size(), report.rows.size());
  EXPECT_FALSE(fixture_rows(GetParam()).empty());
}

INSTANTIATE_TEST_SUITE_P(AllFixtures, TableReproduction, ::testing::ValuesIn(all_fixture_ids()),
                         [](const auto& info) {
                           std::string name(to_string(info.param));
                           std::erase(name, '-');
                           return name;
                         });

TEST(TableReproduction, BibiPairsSpotValue) {
  const auto report = reproduce_table(FixtureId::BibiPairs, {});
  bool seen = false;
  for (const auto& row : report.rows) {
    for (const auto& v : row.detail["values"]) {
      if (v["r"] == 7 && v["k"] == 1 && v["triple"] == nlohmann::json{2, 3, 7}) {
        EXPECT_EQ(v["lhs"], 2);
        EXPECT_EQ(v["rhs"], 4);
        seen = true;
      }
    }
  }
  EXPECT_TRUE(seen);
}

TEST(TableReproduction, SampleRangeIsHonoured) {
  TableOptions small;
  small.sample_c = 20;
  const auto a = reproduce_table(FixtureId::AltNonGen, small);
  const auto b = reproduce_table(FixtureId::AltNonGen, {});
  EXPECT_EQ(a.mismatches(), 0);
  EXPECT_LT(a.rows.front().samples, b.rows.front().samples);
}
