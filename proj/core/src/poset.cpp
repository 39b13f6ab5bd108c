#include "flagcone/poset.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace flagcone {

std::string Coordinate::to_string() const {
  std::string out = std::to_string(base) + ":";
  for (std::size_t i = 0; i < replicas.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(replicas[i]);
  }
  return out;
}

Coordinate Coordinate::parse(std::string_view text) {
  auto fail = [&] { return Error(Errc::ParseError, "bad coordinate '" + std::string(text) + "'"); };
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw fail();
  Coordinate c;
  auto head = text.substr(0, colon);
  if (std::from_chars(head.data(), head.data() + head.size(), c.base).ptr != head.data() + head.size())
    throw fail();
  auto rest = text.substr(colon + 1);
  while (!rest.empty()) {
    auto dot = rest.find('.');
    auto part = rest.substr(0, dot);
    std::int32_t v = 0;
    if (part.empty() || std::from_chars(part.data(), part.data() + part.size(), v).ptr != part.data() + part.size())
      throw fail();
    c.replicas.push_back(v);
    rest = dot == std::string_view::npos ? std::string_view{} : rest.substr(dot + 1);
  }
  return c;
}

std::optional<Element> GradedPoset::find(std::int64_t id) const {
  for (std::size_t i = 0; i < ids_.size(); ++i)
    if (ids_[i] == id) return static_cast<Element>(i);
  return std::nullopt;
}

Element GradedPoset::at(std::int64_t id) const {
  auto e = find(id);
  if (!e) throw Error(Errc::InvalidArgument, "no element with id " + std::to_string(id));
  return *e;
}

std::vector<std::pair<Element, Element>> GradedPoset::covers() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < size(); ++x)
    for (Element y : up_[x]) out.emplace_back(x, y);
  return out;
}

std::size_t GradedPoset::cover_count() const noexcept {
  std::size_t c = 0;
  for (const auto& u : up_) c += u.size();
  return c;
}

PosetDraft GradedPoset::to_draft() const {
  PosetDraft d;
  d.rank = rank_;
  d.elements.reserve(size());
  for (Element x = 0; x < size(); ++x) {
    PosetDraft::Node node{ids_[x], rank_of_[x], std::nullopt};
    if (has_coordinates()) node.coordinate = coords_[x];
    d.elements.push_back(std::move(node));
  }
  for (auto [x, y] : covers()) d.covers.emplace_back(ids_[x], ids_[y]);
  return d;
}

GradedPoset build_poset(const PosetDraft& draft) {
  const int rank = draft.rank;
  if (rank < 1) throw Error(Errc::NotGraded, "rank must be at least 1");
  const std::size_t m = draft.elements.size();

  std::unordered_map<std::int64_t, std::size_t> index;
  index.reserve(m * 2);
  for (std::size_t i = 0; i < m; ++i)
    if (!index.emplace(draft.elements[i].id, i).second)
      throw Error(Errc::InvalidArgument, "duplicate element id " + std::to_string(draft.elements[i].id));

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(draft.covers.size());
  for (auto [a, b] : draft.covers) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw Error(Errc::InvalidArgument, "cover references unknown id");
    if (a == b) throw Error(Errc::CycleDetected, "loop at element " + std::to_string(a));
    edges.emplace_back(ia->second, ib->second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  {
    std::vector<std::vector<std::size_t>> succ(m);
    std::vector<std::size_t> indegree(m, 0);
    for (auto [a, b] : edges) {
      succ[a].push_back(b);
      ++indegree[b];
    }
    std::deque<std::size_t> ready;
    for (std::size_t i = 0; i < m; ++i)
      if (indegree[i] == 0) ready.push_back(i);
    std::size_t seen = 0;
    while (!ready.empty()) {
      auto v = ready.front();
      ready.pop_front();
      ++seen;
      for (auto w : succ[v])
        if (--indegree[w] == 0) ready.push_back(w);
    }
    if (seen != m) throw Error(Errc::CycleDetected, "cover relation contains a cycle");
  }

  for (const auto& node : draft.elements)
    if (node.rank < 0 || node.rank > rank)
      throw Error(Errc::NotGraded, "element " + std::to_string(node.id) + " has rank outside [0, " +
                                       std::to_string(rank) + "]");
  for (auto [a, b] : edges)
    if (draft.elements[b].rank != draft.elements[a].rank + 1)
      throw Error(Errc::NotGraded, "cover (" + std::to_string(draft.elements[a].id) + ", " +
                                       std::to_string(draft.elements[b].id) + ") does not raise rank by one");

  std::size_t bottoms = 0, tops = 0;
  for (const auto& node : draft.elements) {
    bottoms += node.rank == 0;
    tops += node.rank == rank;
  }
  if (bottoms != 1 || tops != 1)
    throw Error(Errc::NoUniqueExtremes, "need exactly one element of rank 0 and one of rank " + std::to_string(rank));

  // Internal numbering: stable sort by rank.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return draft.elements[a].rank < draft.elements[b].rank;
  });
  std::vector<Element> internal(m);
  for (std::size_t k = 0; k < m; ++k) internal[order[k]] = static_cast<Element>(k);

  GradedPoset P;
  P.rank_ = rank;
  P.rank_of_.resize(m);
  P.ids_.resize(m);
  P.up_.assign(m, {});
  P.down_.assign(m, {});
  bool all_coords = m > 0;
  for (std::size_t k = 0; k < m; ++k) {
    const auto& node = draft.elements[order[k]];
    P.rank_of_[k] = node.rank;
    P.ids_[k] = node.id;
    all_coords = all_coords && node.coordinate.has_value();
  }
  if (all_coords) {
    P.coords_.reserve(m);
    for (std::size_t k = 0; k < m; ++k) P.coords_.push_back(*draft.elements[order[k]].coordinate);
  }
  P.layer_begin_.assign(static_cast<std::size_t>(rank) + 2, 0);
  for (std::size_t k = 0; k < m; ++k) ++P.layer_begin_[static_cast<std::size_t>(P.rank_of_[k]) + 1];
  for (std::size_t r = 1; r < P.layer_begin_.size(); ++r) P.layer_begin_[r] += P.layer_begin_[r - 1];

  for (auto [a, b] : edges) {
    P.up_[internal[a]].push_back(internal[b]);
    P.down_[internal[b]].push_back(internal[a]);
  }
  for (auto& v : P.up_) std::sort(v.begin(), v.end());
  for (auto& v : P.down_) std::sort(v.begin(), v.end());

  const Element bottom = 0, top = static_cast<Element>(m - 1);
  for (Element x = 0; x < m; ++x) {
    if (x != top && P.up_[x].empty())
      throw Error(Errc::NotGraded, "element " + std::to_string(P.ids_[x]) + " has no upper cover");
    if (x != bottom && P.down_[x].empty())
      throw Error(Errc::NotGraded, "element " + std::to_string(P.ids_[x]) + " has no lower cover");
  }

  P.above_.assign(m, detail::Bitset(m));
  P.below_.assign(m, detail::Bitset(m));
  for (Element x = static_cast<Element>(m); x-- > 0;)
    for (Element y : P.up_[x]) {
      P.above_[x].set(y);
      P.above_[x] |= P.above_[y];
    }
  for (Element y = 0; y < m; ++y)
    for (Element x : P.down_[y]) {
      P.below_[y].set(x);
      P.below_[y] |= P.below_[x];
    }
  return P;
}

GradedPoset build_poset(int rank, const std::vector<std::pair<std::int64_t, int>>& ranks,
                        const std::vector<std::pair<std::int64_t, std::int64_t>>& covers) {
  PosetDraft d;
  d.rank = rank;
  for (auto [id, r] : ranks) d.elements.push_back({id, r, std::nullopt});
  d.covers = covers;
  return build_poset(d);
}

std::vector<Element> open_interval(const GradedPoset& P, Element x, Element y) {
  if (!P.less(x, y)) throw Error(Errc::NotComparable, "open interval needs x < y");
  std::vector<Element> out;
  detail::Bitset::for_each_common(P.above(x), P.below(y), P.layer_begin(P.rank_of(x) + 1),
                                  P.layer_begin(P.rank_of(y)),
                                  [&](std::size_t z) { out.push_back(static_cast<Element>(z)); });
  return out;
}

GradedPoset closed_interval(const GradedPoset& P, Element x, Element y) {
  if (!P.less(x, y)) throw Error(Errc::NotComparable, "closed interval needs x < y");
  std::vector<Element> members;
  members.push_back(x);
  for (Element z : open_interval(P, x, y)) members.push_back(z);
  members.push_back(y);
  detail::Bitset in(P.size());
  for (Element z : members) in.set(z);

  PosetDraft d;
  d.rank = P.rank_of(y) - P.rank_of(x);
  for (Element z : members) {
    PosetDraft::Node node{P.id(z), P.rank_of(z) - P.rank_of(x), std::nullopt};
    if (P.has_coordinates()) node.coordinate = P.coordinate(z);
    d.elements.push_back(std::move(node));
  }
  for (Element z : members)
    for (Element w : P.upper_covers(z))
      if (in.test(w)) d.covers.emplace_back(P.id(z), P.id(w));
  return build_poset(d);
}

GradedPoset rank_selected(const GradedPoset& P, RankSubset S) {
  if (!S.is_subset_of(RankSubset::full(P.n())))
    throw Error(Errc::RangeOutOfBounds, "rank subset " + S.to_braced() + " not inside [1, n]");
  std::vector<int> ranks{0};
  for (int s : S.members()) ranks.push_back(s);
  ranks.push_back(P.rank());

  PosetDraft d;
  d.rank = static_cast<int>(ranks.size()) - 1;
  for (std::size_t level = 0; level < ranks.size(); ++level)
    for (Element z = P.layer_begin(ranks[level]); z < P.layer_end(ranks[level]); ++z) {
      PosetDraft::Node node{P.id(z), static_cast<int>(level), std::nullopt};
      if (P.has_coordinates()) node.coordinate = P.coordinate(z);
      d.elements.push_back(std::move(node));
    }
  for (std::size_t level = 0; level + 1 < ranks.size(); ++level)
    for (Element b = P.layer_begin(ranks[level + 1]); b < P.layer_end(ranks[level + 1]); ++b)
      P.below(b).for_each(P.layer_begin(ranks[level]), P.layer_end(ranks[level]),
                          [&](std::size_t a) { d.covers.emplace_back(P.id(static_cast<Element>(a)), P.id(b)); });
  return build_poset(d);
}

bool is_r_thick(const GradedPoset& P, int r) {
  if (r <= 1) return true;
  const auto need = static_cast<std::size_t>(r);
  for (Element x = 0; x < P.size(); ++x) {
    const int rx = P.rank_of(x);
    if (rx + 2 > P.rank()) break;
    bool ok = true;
    P.above(x).for_each(P.layer_begin(rx + 2), P.size(), [&](std::size_t y) {
      if (!ok) return;
      auto inner = detail::Bitset::count_common(P.above(x), P.below(static_cast<Element>(y)),
                                                P.layer_begin(rx + 1), y);
      ok = inner >= need;
    });
    if (!ok) return false;
  }
  return true;
}

bool is_r_thick_rank2(const GradedPoset& P, int r) {
  if (r <= 1) return true;
  const auto need = static_cast<std::size_t>(r);
  for (Element x = 0; x < P.size(); ++x) {
    const int rx = P.rank_of(x);
    if (rx + 2 > P.rank()) break;
    bool ok = true;
    P.above(x).for_each(P.layer_begin(rx + 2), P.layer_end(rx + 2), [&](std::size_t y) {
      ok = ok && detail::Bitset::count_common(P.above(x), P.below(static_cast<Element>(y)), P.layer_begin(rx + 1),
                                              P.layer_end(rx + 1)) >= need;
    });
    if (!ok) return false;
  }
  return true;
}

void for_each_maximal_chain(const GradedPoset& P, const std::function<bool(std::span<const Element>)>& visit) {
  std::vector<Element> chain{P.bottom()};
  std::vector<std::size_t> cursor{0};
  while (!chain.empty()) {
    Element x = chain.back();
    if (x == P.top()) {
      if (!visit(chain)) return;
      chain.pop_back();
      cursor.pop_back();
      continue;
    }
    auto& c = cursor.back();
    auto ups = P.upper_covers(x);
    if (c < ups.size()) {
      Element next = ups[c++];
      chain.push_back(next);
      cursor.push_back(0);
    } else {
      chain.pop_back();
      cursor.pop_back();
    }
  }
}

Integer count_maximal_chains(const GradedPoset& P) {
  std::vector<Integer> paths(P.size());
  paths[P.bottom()] = 1;
  for (Element x = 0; x < P.size(); ++x)
    for (Element y : P.upper_covers(x)) paths[y] += paths[x];
  return paths[P.top()];
}

bool same_labelled_structure(const GradedPoset& a, const GradedPoset& b) {
  if (a.rank() != b.rank() || a.size() != b.size()) return false;
  std::map<std::int64_t, int> ra, rb;
  for (Element x = 0; x < a.size(); ++x) ra[a.id(x)] = a.rank_of(x);
  for (Element x = 0; x < b.size(); ++x) rb[b.id(x)] = b.rank_of(x);
  if (ra != rb) return false;
  std::set<std::pair<std::int64_t, std::int64_t>> ca, cb;
  for (auto [x, y] : a.covers()) ca.emplace(a.id(x), a.id(y));
  for (auto [x, y] : b.covers()) cb.emplace(b.id(x), b.id(y));
  return ca == cb;
}

}  // namespace flagcone
