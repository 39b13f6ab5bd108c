#include "flagcone/interval_system.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace flagcone;

TEST(IntervalSystem, ParseValidateAndPrint) {
  auto I = IntervalSystem::parse(7, "[3,4][1,2]");
  EXPECT_EQ(I.to_string(), "[1,2][3,4]");
  EXPECT_EQ(IntervalSystem::parse(3, "[3]").intervals()[0], (Interval{3, 3}));
  EXPECT_TRUE(IntervalSystem::parse(3, "{}").empty());
  EXPECT_TRUE(IntervalSystem::parse(3, "").empty());
  EXPECT_EQ(IntervalSystem::parse(3, "{}").to_string(), "{}");
  EXPECT_THROW(IntervalSystem::parse(3, "[1,3][2]"), Error);  // not an antichain
  EXPECT_THROW(IntervalSystem::parse(3, "[1,4]"), Error);
  EXPECT_THROW(IntervalSystem::parse(3, "[1,2"), Error);
}

TEST(IntervalSystem, SmallEnumerations) {
  auto one = enumerate_interval_systems(1);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_TRUE(one[0].empty());
  std::vector<std::string> two;
  for (const auto& I : enumerate_interval_systems(2)) two.push_back(I.to_string());
  EXPECT_EQ(two, (std::vector<std::string>{"{}", "[1]", "[1][2]", "[1,2]", "[2]"}));
}

TEST(IntervalSystem, CountsMatchBruteForce) {
  for (int n = 0; n <= 5; ++n) {
    auto all = enumerate_interval_systems(n);
    EXPECT_EQ(all.size(), oracle::brute_interval_system_count(n)) << "n=" << n;
    std::set<std::string> unique;
    for (const auto& I : all) unique.insert(I.to_string());
    EXPECT_EQ(unique.size(), all.size());
  }
  // Catalan numbers for larger n
  EXPECT_EQ(enumerate_interval_systems(7).size(), 1430u);
  EXPECT_THROW(enumerate_interval_systems(11), Error);
}

TEST(Blockers, Examples) {
  auto b = blockers(IntervalSystem::parse(2, "[1]"));
  EXPECT_EQ(b, (std::vector<RankSubset>{RankSubset::of({1}), RankSubset::of({1, 2})}));
  EXPECT_EQ(blockers(IntervalSystem::parse(3, "[1,2]")).size(), 6u);
  EXPECT_EQ(blockers(IntervalSystem(2, {})).size(), 4u);
}
