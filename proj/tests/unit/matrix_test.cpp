#include "flagcone/matrix.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace flagcone;

TEST(MatrixRank, Examples) {
  std::vector<std::vector<Rational>> I3 = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_EQ(matrix_rank(I3), 3);
  I3.push_back(I3[1]);
  EXPECT_EQ(matrix_rank(I3), 3);
  std::vector<std::vector<Rational>> rep = {{1, 2, 3}, {1, 2, 3}, {0, 1, 1}};
  EXPECT_EQ(matrix_rank(rep), 2);
  EXPECT_EQ(matrix_rank(std::vector<std::vector<Rational>>{}), 0);
  EXPECT_EQ(matrix_rank({{Rational(1, 3), Rational(1, 2)}, {Rational(2, 3), 1}}), 1);
}

TEST(MatrixRank, AgreesWithGaussianElimination) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> v(-3, 3), den(1, 4), dim(1, 7);
  for (int t = 0; t < 300; ++t) {
    const int rows = dim(rng), cols = dim(rng);
    std::vector<std::vector<Rational>> M(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(cols)));
    for (auto& row : M)
      for (auto& x : row) x = (rng() % 3 == 0) ? Rational(0) : Rational(v(rng), den(rng));
    // force some dependence
    if (rows > 2) M[2] = M[0];
    EXPECT_EQ(matrix_rank(M), oracle::gaussian_rank(M));
  }
}
