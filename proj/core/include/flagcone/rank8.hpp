#pragma once

#include "flagcone/functional.hpp"
#include "flagcone/interval_system.hpp"
#include "flagcone/matrix.hpp"
#include "flagcone/poset.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace flagcone {

/// The 21 even subsets of [1,7], in the column order of the certificate matrix.
const std::vector<RankSubset>& rank8_columns();

/// The 20 x 21 matrix of normalized limit L^{1/2}-vectors of the certificate.
const RationalMatrix& rank8_matrix();

/// A matrix row spread over all 128 subsets of [1,7] (zero off the even columns).
LVector rank8_row_vector(std::size_t row);

/// The sixteen interval systems of the limit posets P_1..P_16.
const std::vector<IntervalSystem>& rank8_table_systems();

/// f1356 - f135 - f356 + f15 - f16 + f35 + f36 - f3, nonnegative on half-Eulerian rank-8 posets.
LinearFunctional rank8_f_form();
/// L45 + L2345 + L56 + L1256 - L2367 - L3467 + L4567 + L124567, nonpositive on the same posets.
LinearFunctional rank8_l_form();

/// Half-Eulerian rank-8 posets: point joins of vertical doublings, range-thickened
/// chains and glued posets, each confirmed by the parity test.
std::vector<GradedPoset> half_eulerian_rank8_corpus(std::size_t count, std::uint64_t seed);

struct Rank8Options {
  std::size_t corpus_size = 500;
  std::uint64_t seed = 1;
};

struct CertificateCheck {
  std::string id;  // "a".."f" plus auxiliary checks
  std::string description;
  bool passed = false;
  std::string detail;
};

struct RowMatch {
  std::string source;  // "P1".."P16", "P(N)"
  std::string construction;
  int norm_exponent = 0;
  int row = 0;  // 1-based fixture row, 0 when unmatched
};

struct Rank8Report {
  std::vector<CertificateCheck> checks;
  std::vector<RowMatch> matches;
  std::vector<int> fixture_only_rows;  // rows no construction produced
  int matrix_rank = 0;
  std::size_t corpus_size = 0;
  Rational corpus_minimum;

  bool passed() const;
  nlohmann::json to_json() const;
};

Rank8Report rank8_certificate(const Rank8Options& options = {});

}  // namespace flagcone
