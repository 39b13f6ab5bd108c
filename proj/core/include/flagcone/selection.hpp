#pragma once

#include "flagcone/interval_system.hpp"
#include "flagcone/poset.hpp"

#include <random>
#include <span>
#include <vector>

namespace flagcone {

/// A total order of each rank layer.
class RankOrdering {
 public:
  /// Layers ordered by element index.
  static RankOrdering natural(const GradedPoset& P);
  /// Each layer shuffled independently.
  static RankOrdering shuffled(const GradedPoset& P, std::mt19937_64& rng);

  std::size_t position(Element x) const { return position_[x]; }
  bool before(Element a, Element b) const { return position_[a] < position_[b]; }
  /// Layer r in this order.
  const std::vector<Element>& layer(int r) const { return layers_[static_cast<std::size_t>(r)]; }

 private:
  std::vector<std::vector<Element>> layers_;
  std::vector<std::size_t> position_;
};

/// φ([x, y]): {y} when y covers x, otherwise the first r atoms of [x, y].
/// NotComparable unless x < y; NotThickEnough when fewer than r atoms exist.
std::vector<Element> phi(const GradedPoset& Q, int r, const RankOrdering& ord, Element x, Element y);

/// Smallest j in [i, n+1] with j ∈ S ∪ {n+1}.
int next_in_set(RankSubset S, int n, int i);

/// Maximal chains p_0 < ... < p_{n+1} with p_i ∈ φ([p_{i-1}, p_{M_S(i)}]) for all i in [1, n].
std::vector<std::vector<Element>> selection_F_S(const GradedPoset& Q, int r, const RankOrdering& ord, RankSubset S);

/// I_C: the minimal intervals among [i, ψ(C, i)] with ψ(C, i) ≠ n+1, where
/// ψ(C, i) is the largest j with p_i ∈ φ([p_{i-1}, p_j]).
IntervalSystem chain_interval_system(const GradedPoset& Q, int r, const RankOrdering& ord,
                                     std::span<const Element> chain);

}  // namespace flagcone
