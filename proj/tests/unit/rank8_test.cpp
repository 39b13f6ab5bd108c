#include "flagcone/constructions.hpp"
#include "flagcone/eulerian.hpp"
#include "flagcone/rank8.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <fstream>

using namespace flagcone;

TEST(Rank8, FixtureFileMatchesEmbeddedMatrix) {
  std::ifstream in(FLAGCONE_DATA_DIR "/rank8_matrix.json");
  ASSERT_TRUE(in);
  auto j = nlohmann::json::parse(in);
  const auto& M = rank8_matrix();
  ASSERT_EQ(j["columns"].size(), M.column_count());
  for (std::size_t c = 0; c < M.column_count(); ++c)
    EXPECT_EQ(RankSubset::parse(j["columns"][c].get<std::string>()), M.columns[c]);
  ASSERT_EQ(j["rows"].size(), M.row_count());
  for (std::size_t r = 0; r < M.row_count(); ++r)
    for (std::size_t c = 0; c < M.column_count(); ++c) EXPECT_EQ(Rational(j["rows"][r][c].get<int>()), M.rows[r][c]);
}

TEST(Rank8, MatrixShape) {
  const auto& M = rank8_matrix();
  EXPECT_EQ(M.row_count(), 20u);
  EXPECT_EQ(M.column_count(), 21u);
  for (const auto& S : M.columns) EXPECT_TRUE(is_even_set(S)) << S.to_braced();
  EXPECT_EQ(M.rows[0][0], 1);
  for (std::size_t c = 1; c < 21; ++c) EXPECT_EQ(M.rows[0][c], 0);
  EXPECT_EQ(matrix_rank(M), 20);
  EXPECT_EQ(oracle::gaussian_rank(M.rows), 20);
}

TEST(Rank8, FormsVanishOnRows) {
  auto f = rank8_f_form();
  auto L = rank8_l_form();
  EXPECT_EQ(L.coefficients().size(), 8u);
  for (std::size_t r = 0; r < 20; ++r) {
    EXPECT_EQ(evaluate_on_l(f, rank8_row_vector(r)), 0) << "row " << r + 1;
    EXPECT_EQ(evaluate_on_l(L, rank8_row_vector(r)), 0) << "row " << r + 1;
  }
}

TEST(Rank8, FormsAgreeUpToSignOnHalfEulerian) {
  auto f = rank8_f_form();
  auto L = rank8_l_form();
  for (const auto& P : half_eulerian_rank8_corpus(40, 3)) {
    auto F = flag_f_vector(P);
    EXPECT_EQ(evaluate(f, F), -evaluate(L, F));
    EXPECT_GE(evaluate(f, F), 0);
  }
}

TEST(Rank8, CorpusIsHalfEulerian) {
  auto corpus = half_eulerian_rank8_corpus(30, 8);
  EXPECT_EQ(corpus.size(), 30u);
  for (const auto& P : corpus) {
    EXPECT_EQ(P.rank(), 8);
    EXPECT_TRUE(is_k_eulerian(P, KParam::half(), EulerMethod::Mu2k).holds);
  }
}

TEST(Rank8, Certificate) {
  Rank8Options opts;
  opts.corpus_size = 60;
  auto report = rank8_certificate(opts);
  for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << c.id << ": " << c.detail;
  EXPECT_EQ(report.matrix_rank, 20);
  EXPECT_EQ(report.matches.size(), 17u);
  EXPECT_EQ(report.fixture_only_rows, (std::vector<int>{14, 15, 16}));
  for (const auto& m : report.matches) EXPECT_GT(m.row, 0) << m.source;
  EXPECT_EQ(report.matches.back().row, 20);
  EXPECT_TRUE(report.to_json()["passed"].get<bool>());
}
