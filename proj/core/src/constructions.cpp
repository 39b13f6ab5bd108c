#include "flagcone/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>

namespace flagcone {

namespace {

Coordinate coordinate_of(const GradedPoset& P, Element x) {
  if (P.has_coordinates()) return P.coordinate(x);
  return Coordinate{P.id(x), {}};
}

void check_size(std::size_t m) {
  if (m > kMaxConstructedElements)
    throw Error(Errc::SizeLimit, "construction would have " + std::to_string(m) + " elements (limit " +
                                     std::to_string(kMaxConstructedElements) + ")");
}

// Replaces every element with rank in [u, v] by r copies. With `matched`, covers
// between two replicated elements only join copies with equal index.
GradedPoset replicate(const GradedPoset& P, std::int64_t r, int u, int v, bool matched) {
  if (r < 1) throw Error(Errc::InvalidArgument, "multiplicity must be positive");
  auto replicated = [&](Element x) { return P.rank_of(x) >= u && P.rank_of(x) <= v; };

  std::size_t total = 0;
  for (Element x = 0; x < P.size(); ++x) {
    total += replicated(x) ? static_cast<std::size_t>(std::min<std::int64_t>(r, kMaxConstructedElements + 1)) : 1;
    check_size(total);
  }

  PosetDraft d;
  d.rank = P.rank();
  d.elements.reserve(total);
  std::vector<std::int64_t> first(P.size());
  for (Element x = 0; x < P.size(); ++x) {
    first[x] = static_cast<std::int64_t>(d.elements.size());
    auto base = coordinate_of(P, x);
    if (replicated(x)) {
      for (std::int64_t i = 1; i <= r; ++i) {
        auto c = base;
        c.replicas.push_back(static_cast<std::int32_t>(i));
        d.elements.push_back({static_cast<std::int64_t>(d.elements.size()), P.rank_of(x), std::move(c)});
      }
    } else {
      base.replicas.push_back(0);
      d.elements.push_back({static_cast<std::int64_t>(d.elements.size()), P.rank_of(x), std::move(base)});
    }
  }
  auto copies = [&](Element x) -> std::int64_t { return replicated(x) ? r : 1; };
  for (auto [x, y] : P.covers()) {
    if (matched && replicated(x) && replicated(y)) {
      for (std::int64_t i = 0; i < r; ++i) d.covers.emplace_back(first[x] + i, first[y] + i);
    } else {
      for (std::int64_t i = 0; i < copies(x); ++i)
        for (std::int64_t j = 0; j < copies(y); ++j) d.covers.emplace_back(first[x] + i, first[y] + j);
    }
  }
  return build_poset(d);
}

}  // namespace

GradedPoset chain(int rank) {
  if (rank < 1) throw Error(Errc::InvalidArgument, "chain rank must be at least 1");
  PosetDraft d;
  d.rank = rank;
  for (int i = 0; i <= rank; ++i) d.elements.push_back({i, i, Coordinate{i, {}}});
  for (int i = 0; i < rank; ++i) d.covers.emplace_back(i, i + 1);
  return build_poset(d);
}

GradedPoset boolean_lattice(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "boolean lattice needs n >= 1");
  if (n > 12) throw Error(Errc::SizeLimit, "boolean lattice limited to n <= 12");
  PosetDraft d;
  d.rank = n;
  const std::int64_t count = std::int64_t{1} << n;
  for (std::int64_t s = 0; s < count; ++s)
    d.elements.push_back({s, std::popcount(static_cast<std::uint64_t>(s)), Coordinate{s, {}}});
  for (std::int64_t s = 0; s < count; ++s)
    for (int b = 0; b < n; ++b)
      if (!(s >> b & 1)) d.covers.emplace_back(s, s | (std::int64_t{1} << b));
  return build_poset(d);
}

GradedPoset thicken(const GradedPoset& P, int r) {
  if (r < 1) throw Error(Errc::InvalidArgument, "thickening factor must be positive");
  return replicate(P, r, 1, P.n(), false);
}

GradedPoset thicken_range(const GradedPoset& P, int r, int u, int v) {
  if (u < 1 || v < u || v > P.rank() - 1)
    throw Error(Errc::RangeOutOfBounds, "range [" + std::to_string(u) + "," + std::to_string(v) +
                                            "] not inside [1," + std::to_string(P.rank() - 1) + "]");
  return replicate(P, r, u, v, true);
}

GradedPoset apply_range_ops(const GradedPoset& P, std::span<const RangeOp> ops, OperatorOrder order) {
  GradedPoset Q = P;
  auto apply = [&](const RangeOp& op) {
    if (op.u < 1 || op.v < op.u || op.v > Q.rank() - 1)
      throw Error(Errc::RangeOutOfBounds, "range [" + std::to_string(op.u) + "," + std::to_string(op.v) +
                                              "] not inside [1," + std::to_string(Q.rank() - 1) + "]");
    Q = replicate(Q, op.r, op.u, op.v, true);
  };
  if (order == OperatorOrder::InnermostFirst)
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) apply(*it);
  else
    for (const auto& op : ops) apply(op);
  return Q;
}

GradedPoset vertical_double(const GradedPoset& P) {
  PosetDraft d;
  d.rank = 2 * P.rank() - 1;
  // x -> (lower copy id, upper copy id); bottom and top are not doubled.
  std::vector<std::pair<std::int64_t, std::int64_t>> ids(P.size());
  check_size(2 * P.size());
  for (Element x = 0; x < P.size(); ++x) {
    auto base = coordinate_of(P, x);
    std::int64_t next = static_cast<std::int64_t>(d.elements.size());
    if (x == P.bottom() || x == P.top()) {
      base.replicas.push_back(0);
      int rank = x == P.bottom() ? 0 : d.rank;
      d.elements.push_back({next, rank, std::move(base)});
      ids[x] = {next, next};
      continue;
    }
    auto lo = base, hi = base;
    lo.replicas.push_back(1);
    hi.replicas.push_back(2);
    d.elements.push_back({next, 2 * P.rank_of(x) - 1, std::move(lo)});
    d.elements.push_back({next + 1, 2 * P.rank_of(x), std::move(hi)});
    d.covers.emplace_back(next, next + 1);
    ids[x] = {next, next + 1};
  }
  for (auto [x, y] : P.covers()) d.covers.emplace_back(ids[x].second, ids[y].first);
  return build_poset(d);
}

GradedPoset bipartite_example(int m, int rank) {
  if (m < 1) throw Error(Errc::InvalidArgument, "bipartite example needs m >= 1");
  if (rank < 3) throw Error(Errc::InvalidArgument, "bipartite example needs rank >= 3");
  PosetDraft d;
  d.rank = rank;
  std::int64_t next = 0;
  auto add = [&](int r, std::int64_t base, std::int32_t replica) {
    d.elements.push_back({next, r, Coordinate{base, {replica}}});
    return next++;
  };
  auto bottom = add(0, 0, 0);
  std::vector<std::int64_t> xs, ys;
  for (int i = 1; i <= m; ++i) xs.push_back(add(1, 1, i));
  for (int i = 1; i <= m; ++i) ys.push_back(add(2, 2, i));
  std::int64_t prev = -1;
  for (int r = 3; r <= rank; ++r) {
    auto c = add(r, r, 0);
    if (prev < 0)
      for (auto y : ys) d.covers.emplace_back(y, c);
    else
      d.covers.emplace_back(prev, c);
    prev = c;
  }
  for (int i = 0; i < m; ++i) {
    d.covers.emplace_back(bottom, xs[static_cast<std::size_t>(i)]);
    d.covers.emplace_back(xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(i)]);
  }
  return build_poset(d);
}

GradedPoset regular_swap(const GradedPoset& P, const std::vector<std::pair<std::int64_t, std::int64_t>>& new_edges) {
  if (P.rank() < 3) throw Error(Errc::NotRegular, "regular swap needs rank >= 3");
  const std::size_t degree = P.lower_covers(P.layer_begin(2)).size();
  std::map<Element, std::size_t> deg;
  std::set<std::pair<Element, Element>> seen;
  for (auto [a, b] : new_edges) {
    auto x = P.find(a), y = P.find(b);
    if (!x || !y || P.rank_of(*x) != 1 || P.rank_of(*y) != 2)
      throw Error(Errc::NotRegular, "edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                        ") does not join rank 1 to rank 2");
    if (!seen.emplace(*x, *y).second) throw Error(Errc::NotRegular, "repeated edge");
    ++deg[*x];
    ++deg[*y];
  }
  for (int r = 1; r <= 2; ++r)
    for (Element x = P.layer_begin(r); x < P.layer_end(r); ++x)
      if (deg[x] != degree)
        throw Error(Errc::NotRegular, "element " + std::to_string(P.id(x)) + " has degree " +
                                          std::to_string(deg[x]) + ", expected " + std::to_string(degree));
  auto d = P.to_draft();
  d.covers.clear();
  for (auto [x, y] : P.covers())
    if (!(P.rank_of(x) == 1 && P.rank_of(y) == 2)) d.covers.emplace_back(P.id(x), P.id(y));
  for (auto e : new_edges) d.covers.push_back(e);
  return build_poset(d);
}

GradedPoset bh_poset(int n, const IntervalSystem& I, int N, OperatorOrder order) {
  if (I.n() != n) throw Error(Errc::InvalidArgument, "interval system lives on a different range");
  if (N < 1) throw Error(Errc::InvalidArgument, "N must be positive");
  std::vector<RangeOp> ops;
  for (const auto& iv : I.intervals()) ops.push_back({N, iv.lo, iv.hi});
  return apply_range_ops(chain(n + 1), ops, order);
}

std::vector<std::vector<PolyRangeOp>> glue_part_factors(GlueVariant variant) {
  auto P = [](std::string_view text) { return IntPoly::parse(text); };
  return {
      {{P("N+1"), 1, 2}, {P("N+1"), 2, 3}, {P("N+1"), 4, 5}, {P("N"), 1, 7}},
      {{P("N^2"), 1, 3}, {P("N+1"), 1, 5}, {P("N"), 1, 7}},
      {{P("N^2-N+2"), 1, 4}, {P("N+2"), 4, 5}, {P("N"), 6, 7}},
      {{P(variant == GlueVariant::Corrected ? "N+1" : "N+2"), 1, 2}, {P("N^3-N^2+2"), 2, 7}},
  };
}

std::vector<std::vector<RangeOp>> glue_parts(std::int64_t N, GlueVariant variant) {
  std::vector<std::vector<RangeOp>> out;
  for (const auto& part : glue_part_factors(variant)) {
    auto& ops = out.emplace_back();
    for (const auto& f : part) ops.push_back({f.r.eval(Integer(N)).convert_to<std::int64_t>(), f.u, f.v});
  }
  return out;
}

namespace {

// Replica index contributed by the factor acting on [u, v], given the order
// in which the factors were applied.
std::int32_t replica_for(const Coordinate& c, const std::vector<RangeOp>& ops, OperatorOrder order, int u, int v) {
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].u != u || ops[i].v != v) continue;
    std::size_t position = order == OperatorOrder::InnermostFirst ? ops.size() - 1 - i : i;
    return c.replicas.at(position);
  }
  throw Error(Errc::InvalidArgument, "glue part lacks the expected operator");
}

using GlueKey = std::tuple<int, int, std::int64_t, std::int64_t>;  // kind, rank or part, a, b

}  // namespace

GradedPoset glued_P(int N, GlueOptions options) {
  if (N < 1) throw Error(Errc::InvalidArgument, "N must be positive");
  const auto parts = glue_parts(N, options.variant);
  std::vector<GradedPoset> built;
  for (const auto& ops : parts) built.push_back(apply_range_ops(chain(8), ops, options.order));

  // Shared layers use the canonical (rank, strand, block) labels of the
  // common rank-selected subposets; everything else stays private to its part.
  auto key_of = [&](std::size_t part, Element x) -> GlueKey {
    const auto& P = built[part];
    const int r = P.rank_of(x);
    if (x == P.bottom()) return {0, 0, 0, 0};
    if (x == P.top()) return {1, 0, 0, 0};
    const auto& c = P.coordinate(x);
    if ((part == 0 || part == 1) && r >= 4) {
      std::int64_t a = replica_for(c, parts[part], options.order, 1, 7);
      std::int64_t b = 0;
      if (r <= 5) b = part == 0 ? replica_for(c, parts[0], options.order, 4, 5)
                                : replica_for(c, parts[1], options.order, 1, 5);
      return {2, r, a, b};
    }
    if (part == 2 && r >= 6) return {2, r, replica_for(c, parts[2], options.order, 6, 7), 0};
    return {3 + static_cast<int>(part), 0, static_cast<std::int64_t>(x), 0};
  };

  std::map<GlueKey, std::int64_t> ids;
  PosetDraft d;
  d.rank = 8;
  std::vector<std::vector<std::int64_t>> id_of(built.size());
  for (std::size_t p = 0; p < built.size(); ++p) {
    const auto& P = built[p];
    id_of[p].resize(P.size());
    for (Element x = 0; x < P.size(); ++x) {
      auto key = key_of(p, x);
      auto [it, fresh] = ids.emplace(key, static_cast<std::int64_t>(ids.size()));
      if (fresh) {
        check_size(ids.size());
        auto [kind, r_or_part, a, b] = key;
        Coordinate c;
        if (kind >= 3) {
          c = P.coordinate(x);
          c.base = static_cast<std::int64_t>(p + 1) * 100 + c.base;
        } else {
          c = Coordinate{P.rank_of(x), {static_cast<std::int32_t>(a), static_cast<std::int32_t>(b)}};
        }
        d.elements.push_back({it->second, P.rank_of(x), std::move(c)});
      }
      id_of[p][x] = it->second;
    }
  }

  // The identified layers must carry identical elements and covers from each side.
  auto shared_structure = [&](std::size_t p, int lo) {
    const auto& P = built[p];
    std::set<std::int64_t> elems;
    std::set<std::pair<std::int64_t, std::int64_t>> covs;
    for (Element x = P.layer_begin(lo); x < P.layer_end(7); ++x) elems.insert(id_of[p][x]);
    for (auto [x, y] : P.covers())
      if (P.rank_of(x) >= lo && P.rank_of(y) <= 7) covs.emplace(id_of[p][x], id_of[p][y]);
    return std::pair{elems, covs};
  };
  if (shared_structure(0, 4) != shared_structure(1, 4) || shared_structure(0, 6) != shared_structure(2, 6))
    throw Error(Errc::InvalidArgument, "glue identification does not match the shared subposets");

  std::set<std::pair<std::int64_t, std::int64_t>> covers;
  for (std::size_t p = 0; p < built.size(); ++p)
    for (auto [x, y] : built[p].covers()) covers.emplace(id_of[p][x], id_of[p][y]);
  d.covers.assign(covers.begin(), covers.end());
  return build_poset(d);
}

GradedPoset point_join(const GradedPoset& lower, const GradedPoset& upper) {
  check_size(lower.size() + upper.size() - 1);
  PosetDraft d;
  d.rank = lower.rank() + upper.rank();
  for (Element x = 0; x < lower.size(); ++x)
    d.elements.push_back({static_cast<std::int64_t>(x), lower.rank_of(x), Coordinate{lower.id(x), {1}}});
  const auto offset = static_cast<std::int64_t>(lower.size()) - 1;
  for (Element y = 1; y < upper.size(); ++y)
    d.elements.push_back(
        {offset + y, lower.rank() + upper.rank_of(y), Coordinate{upper.id(y), {2}}});
  for (auto [x, y] : lower.covers()) d.covers.emplace_back(x, y);
  for (auto [x, y] : upper.covers()) d.covers.emplace_back(offset + x, offset + y);
  return build_poset(d);
}

GradedPoset random_graded_poset(int rank, std::mt19937_64& rng, RandomPosetOptions options) {
  if (rank < 1) throw Error(Errc::InvalidArgument, "rank must be at least 1");
  if (options.max_width < 1) throw Error(Errc::InvalidArgument, "max_width must be positive");
  std::uniform_int_distribution<int> width(1, options.max_width);
  std::bernoulli_distribution extra(options.extra_cover_probability);

  std::vector<std::vector<std::int64_t>> layers(static_cast<std::size_t>(rank) + 1);
  PosetDraft d;
  d.rank = rank;
  std::int64_t next = 0;
  for (int r = 0; r <= rank; ++r) {
    int w = (r == 0 || r == rank) ? 1 : width(rng);
    for (int i = 0; i < w; ++i) {
      d.elements.push_back({next, r, Coordinate{next, {}}});
      layers[static_cast<std::size_t>(r)].push_back(next++);
    }
  }
  for (int r = 1; r <= rank; ++r) {
    const auto& below = layers[static_cast<std::size_t>(r) - 1];
    std::uniform_int_distribution<std::size_t> pick(0, below.size() - 1);
    for (auto y : layers[static_cast<std::size_t>(r)]) {
      std::set<std::int64_t> down{below[pick(rng)]};
      for (auto x : below)
        if (r == rank || extra(rng)) down.insert(x);
      for (auto x : down) d.covers.emplace_back(x, y);
    }
  }
  // Every element below the top needs an upper cover.
  std::set<std::int64_t> has_up;
  for (auto [x, y] : d.covers) has_up.insert(x);
  for (int r = 0; r + 1 <= rank; ++r) {
    const auto& above = layers[static_cast<std::size_t>(r) + 1];
    std::uniform_int_distribution<std::size_t> pick(0, above.size() - 1);
    for (auto x : layers[static_cast<std::size_t>(r)])
      if (!has_up.count(x)) d.covers.emplace_back(x, above[pick(rng)]);
  }
  return build_poset(d);
}

}  // namespace flagcone
