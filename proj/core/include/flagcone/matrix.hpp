#pragma once

#include "flagcone/types.hpp"

#include <vector>

namespace flagcone {

/// Dense exact matrix with labelled columns.
struct RationalMatrix {
  std::vector<RankSubset> columns;
  std::vector<std::vector<Rational>> rows;

  std::size_t row_count() const noexcept { return rows.size(); }
  std::size_t column_count() const noexcept { return columns.size(); }
};

/// Rank by fraction-free (Bareiss) elimination after clearing row denominators.
int matrix_rank(const RationalMatrix& M);
int matrix_rank(const std::vector<std::vector<Rational>>& rows);

}  // namespace flagcone
