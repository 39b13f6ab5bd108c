#include "oracles.hpp"

#include "flagcone/constructions.hpp"

#include <map>
#include <random>

namespace flagcone::oracle {

std::vector<GradedPoset> random_corpus(std::size_t count, std::uint64_t seed, int min_rank, int max_rank) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> rank(min_rank, max_rank);
  std::uniform_int_distribution<int> width(1, 3);
  std::vector<GradedPoset> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_graded_poset(rank(rng), rng, {width(rng), 0.35}));
  return out;
}

std::vector<Fixture> eulerian_fixtures() {
  std::vector<Fixture> out;
  for (int n = 1; n <= 5; ++n) out.push_back({"B" + std::to_string(n), boolean_lattice(n), KParam::one(), true});
  for (int j = 1; j <= 4; ++j)
    for (int rank = 2; rank <= 7; ++rank)
      out.push_back({"D" + std::to_string(j) + "(C" + std::to_string(rank) + ")", thicken(chain(rank), j), KParam(j), true});
  out.push_back({"BIP(2,4)", bipartite_example(2, 4), KParam::half(), true});
  out.push_back({"D2(BIP(2,4))", thicken(bipartite_example(2, 4), 2), KParam::one(), true});
  out.push_back({"D4(BIP(3,5))", thicken(bipartite_example(3, 5), 4), KParam(4), true});
  out.push_back({"VD(B3)", vertical_double(boolean_lattice(3)), KParam::half(), true});
  out.push_back({"glued P(1)", glued_P(1), KParam::half(), true});
  // not Eulerian for the stated k
  out.push_back({"C3 at k=1", chain(3), KParam::one(), false});
  out.push_back({"B3 at k=1/2", boolean_lattice(3), KParam::half(), false});
  out.push_back({"D3(C4) at k=1", thicken(chain(4), 3), KParam::one(), false});
  out.push_back({"glued P(1) as printed", glued_P(1, {GlueVariant::AsPrinted, OperatorOrder::InnermostFirst}),
                 KParam::half(), false});
  return out;
}

namespace {

void extend(const GradedPoset& P, Element x, std::uint32_t bits, std::map<std::uint32_t, Integer>& counts) {
  if (x != P.bottom()) counts[bits] += 1;
  for (Element y = 0; y < P.top(); ++y) {
    if (y == P.bottom() || !P.less(x, y)) continue;
    extend(P, y, bits | (1u << (P.rank_of(y) - 1)), counts);
  }
}

}  // namespace

FlagVector brute_flag_vector(const GradedPoset& P) {
  std::map<std::uint32_t, Integer> counts;
  extend(P, P.bottom(), 0, counts);
  FlagVector F(P.rank());
  F.at_index(0) = 1;
  for (const auto& [bits, c] : counts) F.at_index(bits) = c;
  return F;
}

LVector literal_l_vector(const FlagVector& F, KParam k) {
  const int n = F.n();
  const std::uint32_t full = (1u << n) - 1;
  LVector L(F.rank(), k);
  for (std::uint32_t s = 0; s <= full; ++s) {
    const std::uint32_t comp = full & ~s;
    Rational sum = 0;
    for (std::uint32_t t = 0; t <= full; ++t) {
      if ((t & comp) != comp) continue;
      Rational term = F.at_index(t);
      for (int i = 0; i < std::popcount(t); ++i) term *= Rational(-1, k.two_k());
      sum += term;
    }
    if ((n - std::popcount(s)) % 2) sum = -sum;
    L.at_index(s) = sum;
  }
  return L;
}

std::size_t brute_interval_system_count(int n) {
  std::vector<std::pair<int, int>> all;
  for (int lo = 1; lo <= n; ++lo)
    for (int hi = lo; hi <= n; ++hi) all.push_back({lo, hi});
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
    bool antichain = true;
    for (std::size_t i = 0; i < all.size() && antichain; ++i)
      for (std::size_t j = 0; j < all.size() && antichain; ++j) {
        if (i == j || !((mask >> i) & 1) || !((mask >> j) & 1)) continue;
        if (all[i].first <= all[j].first && all[j].second <= all[i].second) antichain = false;
      }
    count += antichain;
  }
  return count;
}

int gaussian_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    auto& p = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / p[c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= factor * p[j];
    }
    ++rank;
  }
  return rank;
}

Rational recursive_moebius(const GradedPoset& P, Element x, Element y, KParam k) {
  if (x == y) return 1;
  Rational sum = 0;
  for (Element z = 0; z < P.size(); ++z)
    if (P.less(x, z) && P.less(z, y)) sum += recursive_moebius(P, x, z, k);
  return -1 - Rational(2, k.two_k()) * sum;
}

}  // namespace flagcone::oracle
