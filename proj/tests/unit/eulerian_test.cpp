#include "flagcone/constructions.hpp"
#include "flagcone/eulerian.hpp"
#include "flagcone/poset_io.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace flagcone;

TEST(Moebius, SmallIntervals) {
  for (int two_k = 1; two_k <= 4; ++two_k) {
    EXPECT_EQ(moebius_k(chain(1), KParam(two_k)).full(), -1);
    // rank 2 with exactly 2k middle elements
    EXPECT_EQ(moebius_k(thicken(chain(2), two_k), KParam(two_k)).full(), 1);
  }
  EXPECT_EQ(moebius_k(boolean_lattice(3), KParam::one()).full(), -1);
}

TEST(Moebius, TableMatchesPlainRecursion) {
  for (const auto& P : oracle::random_corpus(25, 11, 2, 4))
    for (int two_k : {1, 3}) {
      MoebiusTable M(P, KParam(two_k));
      for (Element x = 0; x < P.size(); ++x)
        for (Element y = 0; y < P.size(); ++y)
          if (P.leq(x, y)) EXPECT_EQ(M(x, y), oracle::recursive_moebius(P, x, y, KParam(two_k)));
    }
  MoebiusTable M(chain(3), KParam::one());
  EXPECT_THROW(M(2, 1), Error);
}

TEST(Moebius, HallFormula) {
  for (int two_k = 1; two_k <= 4; ++two_k) {
    const KParam k(two_k);
    EXPECT_EQ(moebius_k_hall(chain(2), k), Rational(2, two_k) - 1);
    EXPECT_EQ(moebius_k(chain(2), k).full(), moebius_k_hall(chain(2), k));
  }
  // f = (1, 2, 2, 4): -(1 - 2 - 2 + 4) = -1, the Eulerian value for rank 3.
  EXPECT_EQ(moebius_k_hall(thicken(chain(3), 2), KParam::one()), -1);
  for (const auto& P : oracle::random_corpus(200, 12))
    for (int two_k = 1; two_k <= 4; ++two_k) EXPECT_EQ(moebius_k_hall(P, KParam(two_k)), moebius_k(P, KParam(two_k)).full());
}

TEST(Moebius, ReplicationLaw) {
  // μ_k on [x, y] of P equals μ_{kl} on the replica interval of D^l P.
  for (const auto& P : oracle::random_corpus(15, 13, 2, 4)) {
    auto Q = thicken(P, 2);
    MoebiusTable MP(P, KParam::one()), MQ(Q, KParam::one().times(2));
    // a replica's coordinate is its original's with one replica index appended
    std::map<Coordinate, Element> original;
    for (Element x = 0; x < P.size(); ++x)
      original[P.has_coordinates() ? P.coordinate(x) : Coordinate{P.id(x), {}}] = x;
    auto source = [&](Element q) {
      auto c = Q.coordinate(q);
      c.replicas.pop_back();
      return original.at(c);
    };
    for (Element x = 0; x < Q.size(); ++x)
      for (Element y = 0; y < Q.size(); ++y)
        if (Q.less(x, y)) EXPECT_EQ(MQ(x, y), MP(source(x), source(y)));
  }
}

TEST(Eulerian, Examples) {
  for (auto m : {EulerMethod::Definition, EulerMethod::LocalL, EulerMethod::Mu2k}) {
    for (int j = 1; j <= 4; ++j)
      for (int rank = 2; rank <= 6; ++rank) EXPECT_TRUE(is_k_eulerian(thicken(chain(rank), j), KParam(j), m).holds);
    for (int n = 1; n <= 5; ++n) EXPECT_TRUE(is_k_eulerian(boolean_lattice(n), KParam::one(), m).holds);
    auto v = is_k_eulerian(chain(3), KParam::one(), m);
    ASSERT_FALSE(v.holds);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_GE(v.witness->rank, 2);
  }
}

TEST(Eulerian, MethodsAgree) {
  for (const auto& P : oracle::random_corpus(150, 14))
    for (int two_k = 1; two_k <= 4; ++two_k) {
      const bool d = is_k_eulerian(P, KParam(two_k), EulerMethod::Definition).holds;
      EXPECT_EQ(d, is_k_eulerian(P, KParam(two_k), EulerMethod::LocalL).holds);
      EXPECT_EQ(d, is_k_eulerian(P, KParam(two_k), EulerMethod::Mu2k).holds);
    }
  for (const auto& f : oracle::eulerian_fixtures()) {
    const bool d = is_k_eulerian(f.poset, f.k, EulerMethod::Definition).holds;
    EXPECT_EQ(d, f.eulerian) << f.name;
    EXPECT_EQ(d, is_k_eulerian(f.poset, f.k, EulerMethod::LocalL).holds) << f.name;
    EXPECT_EQ(d, is_k_eulerian(f.poset, f.k, EulerMethod::Mu2k).holds) << f.name;
  }
}

TEST(Eulerian, ThickeningLaw) {
  for (const auto& P : oracle::random_corpus(40, 15, 2, 4))
    for (int l : {2, 3})
      EXPECT_EQ(is_k_eulerian(P, KParam::half()).holds, is_k_eulerian(thicken(P, l), KParam::half().times(l)).holds);
}

TEST(Eulerian, FixturesAreThickAndAlternate) {
  for (const auto& f : oracle::eulerian_fixtures()) {
    if (!f.eulerian) continue;
    EXPECT_TRUE(is_r_thick(f.poset, f.k.two_k())) << f.name;
    EXPECT_EQ(Rational(alternating_rank_sum(flag_f_vector(f.poset))), eulerian_alternating_value(f.poset.n(), f.k))
        << f.name;
  }
}

TEST(HalfEulerian, ParityAgreesWithDefinition) {
  EXPECT_TRUE(is_half_eulerian_parity(chain(6)).holds);
  EXPECT_FALSE(is_half_eulerian_parity(boolean_lattice(2)).holds);
  for (const auto& P : oracle::random_corpus(200, 16)) {
    const bool parity = is_half_eulerian_parity(P).holds;
    EXPECT_EQ(parity, is_k_eulerian(P, KParam::half()).holds);
    // equivalently the ordinary Möbius function vanishes on even-rank intervals
    MoebiusTable M(P, KParam::one());
    bool vanishes = true;
    for (Element x = 0; x < P.size(); ++x)
      for (Element y = 0; y < P.size(); ++y)
        if (P.less(x, y) && (P.rank_of(y) - P.rank_of(x)) % 2 == 0 && M(x, y) != 0) vanishes = false;
    EXPECT_EQ(parity, vanishes);
  }
}

TEST(DehnSommerville, Examples) {
  auto B = ds_residuals(flag_f_vector(boolean_lattice(3)), KParam::one());
  EXPECT_TRUE(B.all_zero_f);
  EXPECT_TRUE(B.all_zero_l);
  auto C = ds_residuals(flag_f_vector(chain(2)), KParam::half());
  ASSERT_EQ(C.residuals.size(), 1u);
  EXPECT_EQ(C.residuals[0].i, 1);
  EXPECT_EQ(C.residuals[0].l, 1);
  EXPECT_EQ(C.residuals[0].residual, 0);
  auto bad = ds_residuals(flag_f_vector(chain(3)), KParam::one());
  EXPECT_FALSE(bad.all_zero_f);
  EXPECT_FALSE(bad.all_zero_l);
}

TEST(DehnSommerville, BothFormsAgree) {
  for (const auto& P : oracle::random_corpus(150, 18))
    for (int two_k = 1; two_k <= 3; ++two_k) {
      auto r = ds_residuals(flag_f_vector(P), KParam(two_k));
      EXPECT_EQ(r.all_zero_f, r.all_zero_l);
      if (is_k_eulerian(P, KParam(two_k)).holds) EXPECT_TRUE(r.all_zero_f);
    }
  for (const auto& f : oracle::eulerian_fixtures())
    if (f.eulerian) {
      auto r = ds_residuals(flag_f_vector(f.poset), f.k);
      EXPECT_TRUE(r.all_zero_f) << f.name;
      for (const auto& [S, v] : r.noneven) EXPECT_EQ(v, 0) << f.name << " " << S.to_braced();
    }
}

TEST(DehnSommerville, FrozenWitnessLiesInSubspaceByChance) {
  auto P = read_poset_file(FLAGCONE_FIXTURE_DIR "/ds_witness.json");
  auto r = ds_residuals(flag_f_vector(P), KParam::half());
  EXPECT_TRUE(r.all_zero_f);
  EXPECT_TRUE(r.all_zero_l);
  EXPECT_FALSE(is_half_eulerian_parity(P).holds);
  for (auto m : {EulerMethod::Definition, EulerMethod::LocalL, EulerMethod::Mu2k})
    EXPECT_FALSE(is_k_eulerian(P, KParam::half(), m).holds);
}

TEST(DehnSommerville, JsonReport) {
  auto j = ds_residuals(flag_f_vector(chain(3)), KParam::one()).to_json();
  EXPECT_EQ(j["k"], "1");
  EXPECT_FALSE(j["all_zero_f"].get<bool>());
  EXPECT_TRUE(j["residuals"].is_array());
}
