#include "flagcone/matrix.hpp"

#include <utility>

namespace flagcone {

int matrix_rank(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<Integer>> a;
  a.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != cols) throw Error(Errc::InvalidArgument, "matrix rows differ in length");
    Integer lcm = 1;
    for (const auto& q : row) lcm = boost::multiprecision::lcm(lcm, Integer(denominator(q)));
    std::vector<Integer> ints;
    ints.reserve(cols);
    for (const auto& q : row) ints.push_back(numerator(q) * (lcm / denominator(q)));
    a.push_back(std::move(ints));
  }

  const std::size_t m = a.size();
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m; ++c) {
    std::size_t pivot = rank;
    while (pivot < m && a[pivot][c] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[rank][c] * a[i][j] - a[i][c] * a[rank][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return static_cast<int>(rank);
}

int matrix_rank(const RationalMatrix& M) { return matrix_rank(M.rows); }

}  // namespace flagcone
