#pragma once

#include "flagcone/detail/bitset.hpp"
#include "flagcone/types.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace flagcone {

/// Internal element index. Elements are numbered by nondecreasing rank, so the
/// bottom is always 0, the top is always size() - 1, and every rank layer is a
/// contiguous index range.
using Element = std::uint32_t;

/// Provenance of a constructed element: the base element it was replicated
/// from plus one replica index per construction step (0 when a step left the
/// element alone). Carried as a label only; it never affects order queries.
struct Coordinate {
  std::int64_t base = 0;
  std::vector<std::int32_t> replicas;

  std::string to_string() const;
  static Coordinate parse(std::string_view text);
  friend bool operator==(const Coordinate&, const Coordinate&) = default;
  friend auto operator<=>(const Coordinate&, const Coordinate&) = default;
};

/// Unvalidated input to build_poset. Ids are arbitrary but must be unique.
struct PosetDraft {
  struct Node {
    std::int64_t id = 0;
    int rank = 0;
    std::optional<Coordinate> coordinate;
  };
  int rank = 0;
  std::vector<Node> elements;
  std::vector<std::pair<std::int64_t, std::int64_t>> covers;
};

/// A finite graded poset with unique bottom and top. Immutable once built; all
/// order queries are answered from precomputed strict up-set / down-set rows.
class GradedPoset {
 public:
  /// Rank of the top element (n + 1).
  int rank() const noexcept { return rank_; }
  /// n, the size of the rank range [1, n] of interior ranks.
  int n() const noexcept { return rank_ - 1; }
  std::size_t size() const noexcept { return rank_of_.size(); }

  Element bottom() const noexcept { return 0; }
  Element top() const noexcept { return static_cast<Element>(size() - 1); }

  int rank_of(Element x) const { return rank_of_[x]; }
  std::int64_t id(Element x) const { return ids_[x]; }
  std::optional<Element> find(std::int64_t id) const;
  /// Throws InvalidArgument for unknown ids.
  Element at(std::int64_t id) const;

  Element layer_begin(int r) const { return layer_begin_[static_cast<std::size_t>(r)]; }
  Element layer_end(int r) const { return layer_begin_[static_cast<std::size_t>(r) + 1]; }
  std::size_t layer_size(int r) const { return layer_end(r) - layer_begin(r); }

  std::span<const Element> upper_covers(Element x) const { return up_[x]; }
  std::span<const Element> lower_covers(Element x) const { return down_[x]; }
  std::vector<std::pair<Element, Element>> covers() const;
  std::size_t cover_count() const noexcept;

  bool less(Element x, Element y) const { return above_[x].test(y); }
  bool leq(Element x, Element y) const { return x == y || less(x, y); }

  /// Strict up-set / down-set rows, indexed by Element.
  const detail::Bitset& above(Element x) const { return above_[x]; }
  const detail::Bitset& below(Element x) const { return below_[x]; }

  bool has_coordinates() const noexcept { return !coords_.empty(); }
  const Coordinate& coordinate(Element x) const { return coords_[x]; }

  /// The draft this poset was built from (internal order, ids and labels kept).
  PosetDraft to_draft() const;

 private:
  friend GradedPoset build_poset(const PosetDraft& draft);

  int rank_ = 0;
  std::vector<int> rank_of_;
  std::vector<std::int64_t> ids_;
  std::vector<Element> layer_begin_;
  std::vector<std::vector<Element>> up_;
  std::vector<std::vector<Element>> down_;
  std::vector<detail::Bitset> above_;
  std::vector<detail::Bitset> below_;
  std::vector<Coordinate> coords_;
};

/// Validates a draft. Errors: CycleDetected, NotGraded, NoUniqueExtremes,
/// InvalidArgument (duplicate or unknown ids).
GradedPoset build_poset(const PosetDraft& draft);

/// Convenience overload: ranks as (id, rank) pairs.
GradedPoset build_poset(int rank, const std::vector<std::pair<std::int64_t, int>>& ranks,
                        const std::vector<std::pair<std::int64_t, std::int64_t>>& covers);

/// { z : x < z < y }. NotComparable unless x < y.
std::vector<Element> open_interval(const GradedPoset& P, Element x, Element y);

/// The induced poset on [x, y], re-ranked so x has rank 0. NotComparable unless x < y.
GradedPoset closed_interval(const GradedPoset& P, Element x, Element y);

/// P_S: elements with rank in S plus bottom and top, ranks compressed to 0..|S|+1.
GradedPoset rank_selected(const GradedPoset& P, RankSubset S);

/// Full definition: every nonempty open interval has at least r elements.
bool is_r_thick(const GradedPoset& P, int r);
/// Only rank-2 intervals are inspected; agrees with is_r_thick on graded posets.
bool is_r_thick_rank2(const GradedPoset& P, int r);

/// Maximal chains bottom = p_0 < ... < p_{n+1} = top, visited in lexicographic
/// order of element indices. Return false from the visitor to stop early.
void for_each_maximal_chain(const GradedPoset& P,
                            const std::function<bool(std::span<const Element>)>& visit);
Integer count_maximal_chains(const GradedPoset& P);

/// Structural equality of the (id-labelled) cover relation and ranks.
bool same_labelled_structure(const GradedPoset& a, const GradedPoset& b);

}  // namespace flagcone
