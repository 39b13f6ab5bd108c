#include "flagcone/constructions.hpp"
#include "flagcone/functional.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace flagcone;

namespace {

LinearFunctional random_functional(int rank, Basis basis, KParam k, std::mt19937_64& rng) {
  LinearFunctional a(rank, basis, k);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (std::uint32_t s = 0; s < (1u << (rank - 1)); ++s) a.set(RankSubset::from_bits(s), Rational(coef(rng), 1 + rng() % 3));
  return a;
}

// Σ over elements x of rank m+1 of p([0, x]) q([x, 1]).
Rational split_evaluation(const LinearFunctional& p, const LinearFunctional& q, const GradedPoset& P) {
  Rational total = 0;
  const int m = p.rank();
  for (Element x = P.layer_begin(m); x < P.layer_end(m); ++x)
    total += evaluate(p, flag_f_vector(closed_interval(P, P.bottom(), x))) *
             evaluate(q, flag_f_vector(closed_interval(P, x, P.top())));
  return total;
}

}  // namespace

TEST(Functional, ParseAndPrint) {
  auto a = LinearFunctional::parse("f13 - f1", 4);
  EXPECT_EQ(a.basis(), Basis::F);
  EXPECT_EQ(a.coefficient(RankSubset::of({1, 3})), 1);
  EXPECT_EQ(a.coefficient(RankSubset::of({1})), -1);
  EXPECT_EQ(a.to_string(), "-f{1} + f{1,3}");
  EXPECT_EQ(LinearFunctional::parse(a.to_string(), 4), a);

  auto b = LinearFunctional::parse("-1/2 f{} + 3*f_{2,3} + f2 - f2", 4);
  EXPECT_EQ(b.coefficient(RankSubset{}), Rational(-1, 2));
  EXPECT_EQ(b.coefficient(RankSubset::of({2})), 0);
  EXPECT_EQ(b.coefficients().size(), 2u);

  EXPECT_THROW(LinearFunctional::parse("f1 + L2", 4), Error);
  EXPECT_THROW(LinearFunctional::parse("f5", 4), Error);
  EXPECT_THROW(LinearFunctional::parse("f1 +", 4), Error);
}

TEST(Functional, JsonRoundTrip) {
  std::mt19937_64 rng(1);
  auto a = random_functional(5, Basis::L, KParam(3), rng);
  EXPECT_EQ(LinearFunctional::from_json(a.to_json()), a);
  auto pairs = nlohmann::json::parse(R"({"rank": 4, "basis": "f", "coefficients": [["1-3", "1"], ["1", "-1"]]})");
  EXPECT_EQ(LinearFunctional::from_json(pairs), LinearFunctional::parse("f13 - f1", 4));
}

TEST(ChangeBasis, PreservesValuesAndIsInvolutive) {
  std::mt19937_64 rng(2);
  for (const auto& P : oracle::random_corpus(40, 606, 2, 5)) {
    auto F = flag_f_vector(P);
    for (int two_k = 1; two_k <= 4; ++two_k) {
      auto a = random_functional(P.rank(), Basis::F, KParam(two_k), rng);
      auto b = change_basis(a);
      EXPECT_EQ(b.basis(), Basis::L);
      EXPECT_EQ(evaluate(a, F), evaluate(b, F));
      EXPECT_EQ(change_basis(b), a);
    }
  }
}

TEST(ChangeBasis, UnitAtEmptySet) {
  // f_∅ = Σ_T L_T, so the image has every coefficient 1.
  LinearFunctional a(5, Basis::F, KParam::one());
  a.set(RankSubset{}, 1);
  auto b = change_basis(a);
  EXPECT_EQ(b.coefficients().size(), 16u);
  for (const auto& [S, c] : b.coefficients()) EXPECT_EQ(c, 1);
}

TEST(Convolution, RuleExamples) {
  LinearFunctional p(2, Basis::F), q(2, Basis::F);
  p.set(RankSubset{}, 1);
  q.set(RankSubset{}, 1);
  auto pq = convolve(p, q);
  EXPECT_EQ(pq.rank(), 4);
  EXPECT_EQ(pq.coefficients().size(), 1u);
  EXPECT_EQ(pq.coefficient(RankSubset::of({2})), 1);

  LinearFunctional a(1, Basis::F), b(2, Basis::F);
  a.set(RankSubset{}, 1);
  b.set(RankSubset{}, 1);
  EXPECT_EQ(evaluate(convolve(a, b), flag_f_vector(boolean_lattice(3))), 3);

  LinearFunctional u(3, Basis::L, KParam::one()), v(2, Basis::L, KParam::one());
  u.set(RankSubset::of({1}), 1);
  v.set(RankSubset::of({1}), 1);
  auto uv = convolve(u, v);
  EXPECT_EQ(uv.rank(), 5);
  EXPECT_EQ(uv.coefficient(RankSubset::of({1, 4})), 2);

  EXPECT_THROW(convolve(u, p), Error);
}

TEST(Convolution, SplitEvaluationIdentity) {
  std::mt19937_64 rng(3);
  for (const auto& P : oracle::random_corpus(40, 707, 3, 6)) {
    const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(P.rank() - 1));
    const int n = P.rank() - m;
    for (Basis basis : {Basis::F, Basis::L}) {
      auto p = random_functional(m, basis, KParam(2), rng);
      auto q = random_functional(n, basis, KParam(2), rng);
      EXPECT_EQ(evaluate(convolve(p, q), flag_f_vector(P)), split_evaluation(p, q, P));
    }
  }
}

TEST(ThickRescaled, Coefficients) {
  auto a = LinearFunctional::parse("f13 - f1 + 2 f{}", 4);
  auto b = thick_rescaled(a, 3);
  EXPECT_EQ(b.coefficient(RankSubset::of({1, 3})), 3);
  EXPECT_EQ(b.coefficient(RankSubset::of({1})), -9);
  EXPECT_EQ(b.coefficient(RankSubset{}), 54);
}
