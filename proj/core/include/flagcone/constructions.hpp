#pragma once

#include "flagcone/int_poly.hpp"
#include "flagcone/interval_system.hpp"
#include "flagcone/poset.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace flagcone {

/// Constructions refuse to materialize posets larger than this (order rows are quadratic).
inline constexpr std::size_t kMaxConstructedElements = 40000;

GradedPoset chain(int rank);

/// Subsets of an n-set under inclusion; element id = subset bitmask. SizeLimit for n > 12.
GradedPoset boolean_lattice(int n);

/// D^r P: every interior element replaced by r incomparable copies.
GradedPoset thicken(const GradedPoset& P, int r);

/// D^r_[u,v] P: elements with rank in [u, v] replaced by r copies; inside the range
/// copies only relate to copies with the same index. RangeOutOfBounds unless
/// 1 <= u <= v <= rank(P) - 1.
GradedPoset thicken_range(const GradedPoset& P, int r, int u, int v);

/// Each interior x becomes x_1 < x_2 at ranks 2ρ(x) - 1 and 2ρ(x).
GradedPoset vertical_double(const GradedPoset& P);

/// Chain of the given rank with its rank-1 and rank-2 elements replaced by
/// x_1..x_m and y_1..y_m, x_i < y_j iff i = j. Requires rank >= 3.
GradedPoset bipartite_example(int m, int rank);

/// Replaces the rank-1/rank-2 covers of P by `new_edges` (pairs of element ids).
/// NotRegular unless the new graph is d-regular on those two layers, where d is
/// the number of rank-1 elements below each rank-2 element in P.
GradedPoset regular_swap(const GradedPoset& P, const std::vector<std::pair<std::int64_t, std::int64_t>>& new_edges);

/// One D^r_[u,v] factor of a composite operator.
struct RangeOp {
  std::int64_t r = 1;
  int u = 1;
  int v = 1;
};

enum class OperatorOrder {
  InnermostFirst,  // D_a D_b D_c (P) = D_a(D_b(D_c(P)))
  OutermostFirst,  // the leftmost factor is applied to P first
};

/// Applies a product of range operators written left to right.
GradedPoset apply_range_ops(const GradedPoset& P, std::span<const RangeOp> ops,
                            OperatorOrder order = OperatorOrder::InnermostFirst);

/// The limit-family member P(n, I, N): D^N_[u,v] over every [u,v] of I, applied to C_{n+1}.
GradedPoset bh_poset(int n, const IntervalSystem& I, int N, OperatorOrder order = OperatorOrder::InnermostFirst);

enum class GlueVariant {
  Corrected,  // outer multiplicity N+1 in P^IV, which makes P(N) half-Eulerian
  AsPrinted,  // outer multiplicity N+2, as typeset; not half-Eulerian
};

struct GlueOptions {
  GlueVariant variant = GlueVariant::Corrected;
  OperatorOrder order = OperatorOrder::InnermostFirst;
};

/// A range operator whose multiplicity is a polynomial in N.
struct PolyRangeOp {
  IntPoly r;
  int u = 1;
  int v = 1;
};

/// Operator factors of the four rank-8 parts P^I..P^IV, left to right.
std::vector<std::vector<PolyRangeOp>> glue_part_factors(GlueVariant variant);
/// The same factors evaluated at N.
std::vector<std::vector<RangeOp>> glue_parts(std::int64_t N, GlueVariant variant);

/// The rank-8 poset P(N) obtained by gluing P^I..P^IV(N) along the shared
/// bottom and top, P^I_{4,5,6,7} = P^II_{4,5,6,7} and P^I_{6,7} = P^III_{6,7}.
GradedPoset glued_P(int N, GlueOptions options = {});

/// Identifies the top of `lower` with the bottom of `upper`; ranks add.
GradedPoset point_join(const GradedPoset& lower, const GradedPoset& upper);

struct RandomPosetOptions {
  int max_width = 3;
  double extra_cover_probability = 0.35;
};

/// A random graded poset of the given rank; deterministic in the generator state.
GradedPoset random_graded_poset(int rank, std::mt19937_64& rng, RandomPosetOptions options = {});

}  // namespace flagcone
