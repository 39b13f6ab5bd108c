#pragma once

#include "flagcone/flag_algebra.hpp"
#include "flagcone/poset.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace flagcone::oracle {

/// Random graded posets of rank in [min_rank, max_rank], deterministic in seed.
std::vector<GradedPoset> random_corpus(std::size_t count, std::uint64_t seed, int min_rank = 2, int max_rank = 6);

/// Known k-Eulerian posets (and a few that are not), with the k they are tested at.
struct Fixture {
  std::string name;
  GradedPoset poset;
  KParam k;
  bool eulerian = false;
};
std::vector<Fixture> eulerian_fixtures();

// Oracles. Deliberately naive: direct enumeration, no shared code with the library.

/// f_S by listing every chain bottom < y_1 < ... < y_j < top and reading off its rank set.
FlagVector brute_flag_vector(const GradedPoset& P);
/// The defining double sum of L^k_S, term by term.
LVector literal_l_vector(const FlagVector& F, KParam k);
/// Antichains among the n(n+1)/2 subintervals of [1, n], by checking all subsets.
std::size_t brute_interval_system_count(int n);
/// Row echelon form over the rationals with ordinary division.
int gaussian_rank(std::vector<std::vector<Rational>> rows);
/// μ_k by the plain recursion over the open interval, using only P.less().
Rational recursive_moebius(const GradedPoset& P, Element x, Element y, KParam k);

}  // namespace flagcone::oracle
