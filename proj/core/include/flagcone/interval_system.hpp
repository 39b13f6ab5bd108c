#pragma once

#include "flagcone/types.hpp"

#include <functional>
#include <string>
#include <vector>

namespace flagcone {

/// A subinterval [lo, hi] of the rank range [1, n].
struct Interval {
  int lo = 1;
  int hi = 1;

  RankSubset members() const { return RankSubset::interval(lo, hi); }
  int length() const noexcept { return hi - lo + 1; }
  bool contains(const Interval& other) const noexcept { return lo <= other.lo && other.hi <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// An antichain of subintervals of [1, n] (no member contains another).
/// Intervals are kept sorted by left endpoint, which for an antichain also
/// sorts the right endpoints.
class IntervalSystem {
 public:
  IntervalSystem() = default;
  /// Throws InvalidArgument unless the intervals lie in [1, n] and form an antichain.
  IntervalSystem(int n, std::vector<Interval> intervals);

  /// Parses "[1,2][3,4]" (also "[3]" for [3,3]); "" or "{}" or "∅" is the empty system.
  static IntervalSystem parse(int n, std::string_view text);
  /// The maximal intervals of S, e.g. {1,3,4,7,8,9,10} -> [1][3,4][7,10].
  static IntervalSystem of_maximal_intervals(int n, RankSubset S);

  int n() const noexcept { return n_; }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  bool empty() const noexcept { return intervals_.empty(); }
  std::size_t size() const noexcept { return intervals_.size(); }

  /// S blocks the system when it meets every interval (vacuous for the empty system).
  bool blocked_by(RankSubset S) const noexcept;
  /// "[1,2][3,4]", with singletons printed as "[3]"; the empty system prints as "{}".
  std::string to_string() const;

  friend bool operator==(const IntervalSystem&, const IntervalSystem&) = default;

 private:
  int n_ = 0;
  std::vector<Interval> intervals_;
};

/// Visits every interval system on [1, n] exactly once: the empty system first,
/// then in lexicographic order of the sorted interval lists. Return false to stop.
/// SizeLimit for n > 10.
void for_each_interval_system(int n, const std::function<bool(const IntervalSystem&)>& visit);
std::vector<IntervalSystem> enumerate_interval_systems(int n);

/// B_[1,n](I): every S ⊆ [1, n] that blocks I, in increasing bitmask order.
std::vector<RankSubset> blockers(const IntervalSystem& I);

/// S is even when every maximal interval of S has even cardinality.
bool is_even_set(RankSubset S);

}  // namespace flagcone
