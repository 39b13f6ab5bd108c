#include "flagcone/constructions.hpp"
#include "flagcone/selection.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace flagcone;

TEST(Selection, NextInSet) {
  EXPECT_EQ(next_in_set(RankSubset::of({3}), 4, 2), 3);
  EXPECT_EQ(next_in_set(RankSubset::of({3}), 4, 4), 5);
  EXPECT_EQ(next_in_set(RankSubset::of({3}), 4, 3), 3);
}

TEST(Selection, PhiRules) {
  auto Q = thicken(chain(4), 3);
  auto ord = RankOrdering::natural(Q);
  auto a = Q.layer_begin(1);
  EXPECT_EQ(phi(Q, 2, ord, Q.bottom(), a), std::vector<Element>{a});
  auto first = phi(Q, 2, ord, Q.bottom(), Q.top());
  EXPECT_EQ(first, (std::vector<Element>{Q.layer_begin(1), Q.layer_begin(1) + 1}));
  EXPECT_THROW(phi(Q, 4, ord, Q.bottom(), Q.top()), Error);
  EXPECT_THROW(phi(Q, 2, ord, a, a + 1), Error);
}

TEST(Selection, PhiHeredity) {
  // p ∈ [x, y] ⊆ [x, z] and p ∈ φ([x, z]) imply p ∈ φ([x, y]).
  std::mt19937_64 rng(5);
  for (int r : {2, 3}) {
    auto Q = thicken(oracle::random_corpus(1, 50 + r, 4, 5)[0], r);
    auto ord = RankOrdering::shuffled(Q, rng);
    for (Element x = 0; x < Q.size(); ++x)
      for (Element z = 0; z < Q.size(); ++z) {
        if (!Q.less(x, z)) continue;
        auto big = phi(Q, r, ord, x, z);
        for (Element y = 0; y < Q.size(); ++y) {
          if (!Q.less(x, y) || !Q.leq(y, z)) continue;
          auto small = phi(Q, r, ord, x, y);
          for (auto p : big)
            if (Q.leq(p, y)) EXPECT_NE(std::find(small.begin(), small.end(), p), small.end());
        }
      }
  }
}

TEST(Selection, SmallCount) {
  auto Q = thicken(chain(3), 2);
  EXPECT_EQ(selection_F_S(Q, 2, RankOrdering::natural(Q), RankSubset::of({1})).size(), 4u);
  EXPECT_EQ(selection_F_S(Q, 2, RankOrdering::natural(Q), RankSubset::full(2)).size(), 4u);
}

TEST(Selection, CountAndBlockingEquivalence) {
  std::mt19937_64 rng(6);
  int combos = 0;
  for (int r : {2, 3}) {
    for (const auto& base : oracle::random_corpus(6, 60 + r, 3, 5)) {
      auto Q = thicken(base, r);
      auto F = flag_f_vector(Q);
      const int n = Q.n();
      for (int trial = 0; trial < 2; ++trial) {
        auto ord = trial == 0 ? RankOrdering::natural(Q) : RankOrdering::shuffled(Q, rng);
        std::map<std::string, std::pair<IntervalSystem, Integer>> by_system;
        std::set<std::vector<Element>> chains_seen;
        for_each_maximal_chain(Q, [&](std::span<const Element> c) {
          auto I = chain_interval_system(Q, r, ord, c);
          auto& slot = by_system.try_emplace(I.to_string(), I, 0).first->second;
          slot.second += 1;
          return true;
        });
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
          const auto S = RankSubset::from_bits(s);
          auto FS = selection_F_S(Q, r, ord, S);
          Integer scale = 1;
          for (int i = 0; i < n - S.size(); ++i) scale *= r;
          EXPECT_EQ(Integer(FS.size()), scale * F[S]);
          for (const auto& c : FS) EXPECT_TRUE(chain_interval_system(Q, r, ord, c).blocked_by(S));
          Integer blocked = 0;
          for (const auto& [key, entry] : by_system)
            if (entry.first.blocked_by(S)) blocked += entry.second;
          EXPECT_EQ(blocked, Integer(FS.size()));
          ++combos;
        }
      }
    }
  }
  EXPECT_GE(combos, 50);
}
