#include "flagcone/selection.hpp"

#include <algorithm>

namespace flagcone {

RankOrdering RankOrdering::natural(const GradedPoset& P) {
  RankOrdering o;
  o.layers_.resize(static_cast<std::size_t>(P.rank()) + 1);
  o.position_.resize(P.size());
  for (int r = 0; r <= P.rank(); ++r)
    for (Element x = P.layer_begin(r); x < P.layer_end(r); ++x) {
      o.position_[x] = o.layers_[static_cast<std::size_t>(r)].size();
      o.layers_[static_cast<std::size_t>(r)].push_back(x);
    }
  return o;
}

RankOrdering RankOrdering::shuffled(const GradedPoset& P, std::mt19937_64& rng) {
  auto o = natural(P);
  for (auto& layer : o.layers_) {
    std::shuffle(layer.begin(), layer.end(), rng);
    for (std::size_t i = 0; i < layer.size(); ++i) o.position_[layer[i]] = i;
  }
  return o;
}

std::vector<Element> phi(const GradedPoset& Q, int r, const RankOrdering& ord, Element x, Element y) {
  if (!Q.less(x, y)) throw Error(Errc::NotComparable, "phi needs x < y");
  if (Q.rank_of(y) == Q.rank_of(x) + 1) return {y};
  std::vector<Element> out;
  for (Element a : ord.layer(Q.rank_of(x) + 1)) {
    if (Q.less(x, a) && Q.less(a, y)) out.push_back(a);
    if (static_cast<int>(out.size()) == r) return out;
  }
  throw Error(Errc::NotThickEnough, "interval [" + std::to_string(Q.id(x)) + ", " + std::to_string(Q.id(y)) +
                                        "] has fewer than " + std::to_string(r) + " atoms");
}

int next_in_set(RankSubset S, int n, int i) {
  for (int j = i; j <= n; ++j)
    if (S.contains(j)) return j;
  return n + 1;
}

namespace {

bool in_phi(const GradedPoset& Q, int r, const RankOrdering& ord, Element x, Element y, Element p) {
  auto set = phi(Q, r, ord, x, y);
  return std::find(set.begin(), set.end(), p) != set.end();
}

}  // namespace

std::vector<std::vector<Element>> selection_F_S(const GradedPoset& Q, int r, const RankOrdering& ord, RankSubset S) {
  const int n = Q.n();
  std::vector<std::vector<Element>> out;
  for_each_maximal_chain(Q, [&](std::span<const Element> c) {
    for (int i = 1; i <= n; ++i) {
      auto iu = static_cast<std::size_t>(i);
      auto m = static_cast<std::size_t>(next_in_set(S, n, i));
      if (!in_phi(Q, r, ord, c[iu - 1], c[m], c[iu])) return true;
    }
    out.emplace_back(c.begin(), c.end());
    return true;
  });
  return out;
}

IntervalSystem chain_interval_system(const GradedPoset& Q, int r, const RankOrdering& ord,
                                     std::span<const Element> chain) {
  const int n = Q.n();
  if (static_cast<int>(chain.size()) != n + 2) throw Error(Errc::InvalidArgument, "not a maximal chain");
  std::vector<Interval> candidates;
  for (int i = 1; i <= n; ++i) {
    auto iu = static_cast<std::size_t>(i);
    int psi = i;
    for (int j = i; j <= n + 1; ++j)
      if (in_phi(Q, r, ord, chain[iu - 1], chain[static_cast<std::size_t>(j)], chain[iu])) psi = j;
    if (psi != n + 1) candidates.push_back({i, psi});
  }
  std::vector<Interval> minimal;
  for (const auto& a : candidates) {
    bool keep = true;
    for (const auto& b : candidates)
      if (b != a && a.contains(b)) keep = false;
    if (keep && std::find(minimal.begin(), minimal.end(), a) == minimal.end()) minimal.push_back(a);
  }
  return IntervalSystem(n, std::move(minimal));
}

}  // namespace flagcone
