#include "flagcone/constructions.hpp"
#include "flagcone/poset.hpp"
#include "flagcone/poset_io.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace flagcone;

namespace {

GradedPoset diamond() { return build_poset(2, {{0, 0}, {1, 1}, {2, 1}, {3, 2}}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no flagcone::Error thrown";
  return Errc::InvalidArgument;
}

}  // namespace

TEST(BuildPoset, ThreeElementChain) {
  auto P = build_poset(2, {{10, 0}, {11, 1}, {12, 2}}, {{10, 11}, {11, 12}});
  EXPECT_EQ(P.rank(), 2);
  EXPECT_EQ(P.size(), 3u);
  EXPECT_EQ(P.id(P.bottom()), 10);
  EXPECT_EQ(P.id(P.top()), 12);
}

TEST(BuildPoset, RankJumpIsNotGraded) {
  EXPECT_EQ(code_of([] { build_poset(2, {{0, 0}, {1, 1}, {2, 2}}, {{0, 1}, {1, 2}, {0, 2}}); }), Errc::NotGraded);
}

TEST(BuildPoset, Diamond) {
  auto P = diamond();
  EXPECT_EQ(P.layer_size(1), 2u);
  EXPECT_EQ(P.upper_covers(P.bottom()).size(), 2u);
  EXPECT_EQ(P.lower_covers(P.top()).size(), 2u);
}

TEST(BuildPoset, Rejections) {
  // two bottoms
  EXPECT_EQ(code_of([] { build_poset(1, {{0, 0}, {1, 0}, {2, 1}}, {{0, 2}, {1, 2}}); }), Errc::NoUniqueExtremes);
  // dead end below the top
  EXPECT_EQ(code_of([] { build_poset(2, {{0, 0}, {1, 1}, {2, 1}, {3, 2}}, {{0, 1}, {0, 2}, {1, 3}}); }),
            Errc::NotGraded);
  // cycle among equal ranks is caught before grading
  EXPECT_EQ(code_of([] { build_poset(2, {{0, 0}, {1, 1}, {2, 1}, {3, 2}}, {{0, 1}, {1, 2}, {2, 1}, {2, 3}}); }),
            Errc::CycleDetected);
}

TEST(BuildPoset, DegenerateRankOne) {
  auto P = chain(1);
  EXPECT_EQ(P.size(), 2u);
  EXPECT_EQ(P.n(), 0);
}

TEST(Intervals, OpenInterval) {
  auto D = diamond();
  EXPECT_EQ(open_interval(D, D.bottom(), D.top()).size(), 2u);
  auto C = chain(4);
  EXPECT_EQ(open_interval(C, C.bottom(), C.layer_begin(2)).size(), 1u);
  EXPECT_TRUE(open_interval(C, C.layer_begin(1), C.layer_begin(2)).empty());
  EXPECT_EQ(code_of([&] { open_interval(D, D.layer_begin(1), D.layer_begin(1) + 1); }), Errc::NotComparable);
}

TEST(Intervals, ClosedIntervalIsGradedWithRelativeRank) {
  for (const auto& P : oracle::random_corpus(30, 5)) {
    for (Element x = 0; x < P.size(); ++x)
      for (Element y = 0; y < P.size(); ++y) {
        if (!P.less(x, y)) continue;
        auto I = closed_interval(P, x, y);
        EXPECT_EQ(I.rank(), P.rank_of(y) - P.rank_of(x));
        EXPECT_EQ(I.size(), open_interval(P, x, y).size() + 2);
      }
  }
}

TEST(RankSelection, Extremes) {
  auto B3 = boolean_lattice(3);
  EXPECT_TRUE(same_labelled_structure(rank_selected(B3, RankSubset::full(2)), B3));
  auto E = rank_selected(B3, RankSubset{});
  EXPECT_EQ(E.rank(), 1);
  EXPECT_EQ(E.size(), 2u);
  auto S1 = rank_selected(B3, RankSubset::of({1}));
  EXPECT_EQ(S1.rank(), 2);
  EXPECT_EQ(S1.layer_size(1), 3u);
}

TEST(RankSelection, NestedSelectionsCompose) {
  for (const auto& P : oracle::random_corpus(20, 9, 5, 6)) {
    auto S = RankSubset::of({1, 2, 4});
    auto inner = rank_selected(rank_selected(P, S), RankSubset::of({1, 3}));
    auto direct = rank_selected(P, RankSubset::of({1, 4}));
    EXPECT_TRUE(same_labelled_structure(inner, direct));
  }
}

TEST(Thickness, Examples) {
  EXPECT_TRUE(is_r_thick(chain(5), 1));
  EXPECT_TRUE(is_r_thick(diamond(), 2));
  EXPECT_FALSE(is_r_thick(diamond(), 3));
  EXPECT_TRUE(is_r_thick(thicken(chain(4), 3), 3));
}

TEST(Thickness, RankTwoShortcutAgrees) {
  for (const auto& P : oracle::random_corpus(150, 17))
    for (int r = 1; r <= 4; ++r) EXPECT_EQ(is_r_thick(P, r), is_r_thick_rank2(P, r));
}

TEST(Chains, MaximalChainsSpanAllRanks) {
  for (const auto& P : oracle::random_corpus(40, 21)) {
    Integer count = 0;
    for_each_maximal_chain(P, [&](std::span<const Element> c) {
      EXPECT_EQ(c.size(), static_cast<std::size_t>(P.rank()) + 1);
      for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(P.rank_of(c[i]), static_cast<int>(i));
      ++count;
      return true;
    });
    EXPECT_EQ(count, count_maximal_chains(P));
  }
}

TEST(PosetIo, JsonRoundTrip) {
  auto P = thicken_range(chain(5), 2, 1, 3);
  auto Q = poset_from_json(poset_to_json(P));
  EXPECT_TRUE(same_labelled_structure(P, Q));
  ASSERT_TRUE(Q.has_coordinates());
  for (Element x = 0; x < P.size(); ++x) EXPECT_EQ(P.coordinate(x), Q.coordinate(Q.at(P.id(x))));

  auto path = std::filesystem::temp_directory_path() / "flagcone_poset_io_test.json";
  write_poset_file(P, path);
  EXPECT_TRUE(same_labelled_structure(read_poset_file(path), P));
  std::filesystem::remove(path);
}

TEST(PosetIo, PlainFormatWithoutLabels) {
  auto j = nlohmann::json::parse(R"({"rank": 2, "elements": [{"id": 5, "rank": 0}, {"id": 7, "rank": 1},
      {"id": 9, "rank": 1}, {"id": 1, "rank": 2}], "covers": [[5,7],[5,9],[7,1],[9,1]]})");
  auto P = poset_from_json(j);
  EXPECT_TRUE(same_labelled_structure(P, build_poset(2, {{5, 0}, {7, 1}, {9, 1}, {1, 2}}, {{5, 7}, {5, 9}, {7, 1}, {9, 1}})));
  EXPECT_EQ(code_of([] { poset_from_json(nlohmann::json::parse(R"({"rank": 2})")); }), Errc::ParseError);
}
