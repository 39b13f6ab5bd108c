#include "flagcone/interval_system.hpp"

#include <algorithm>
#include <cctype>

namespace flagcone {

IntervalSystem::IntervalSystem(int n, std::vector<Interval> intervals) : n_(n), intervals_(std::move(intervals)) {
  if (n < 0 || n > RankSubset::kMaxGround) throw Error(Errc::InvalidArgument, "ground set size out of range");
  for (const auto& iv : intervals_)
    if (iv.lo < 1 || iv.hi > n || iv.lo > iv.hi)
      throw Error(Errc::InvalidArgument, "interval [" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) +
                                             "] not inside [1," + std::to_string(n) + "]");
  std::sort(intervals_.begin(), intervals_.end());
  for (std::size_t i = 0; i < intervals_.size(); ++i)
    for (std::size_t j = 0; j < intervals_.size(); ++j)
      if (i != j && intervals_[i].contains(intervals_[j]))
        throw Error(Errc::InvalidArgument, "intervals of a system must form an antichain");
}

IntervalSystem IntervalSystem::parse(int n, std::string_view text) {
  std::vector<Interval> out;
  std::size_t i = 0;
  auto fail = [&] { return Error(Errc::ParseError, "bad interval system '" + std::string(text) + "'"); };
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto number = [&] {
    skip();
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) throw fail();
    int v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
    return v;
  };
  skip();
  if (text.substr(i) == "{}" || text.substr(i) == "∅") return IntervalSystem(n, {});
  while (true) {
    skip();
    if (i >= text.size()) break;
    if (text[i] != '[') throw fail();
    ++i;
    int lo = number();
    skip();
    int hi = lo;
    if (i < text.size() && text[i] == ',') {
      ++i;
      hi = number();
      skip();
    }
    if (i >= text.size() || text[i] != ']') throw fail();
    ++i;
    out.push_back({lo, hi});
  }
  return IntervalSystem(n, std::move(out));
}

IntervalSystem IntervalSystem::of_maximal_intervals(int n, RankSubset S) {
  std::vector<Interval> out;
  for (int i = 1; i <= n; ++i) {
    if (!S.contains(i)) continue;
    int j = i;
    while (j + 1 <= n && S.contains(j + 1)) ++j;
    out.push_back({i, j});
    i = j;
  }
  return IntervalSystem(n, std::move(out));
}

bool IntervalSystem::blocked_by(RankSubset S) const noexcept {
  for (const auto& iv : intervals_)
    if (!S.intersects(iv.members())) return false;
  return true;
}

std::string IntervalSystem::to_string() const {
  if (intervals_.empty()) return "{}";
  std::string out;
  for (const auto& iv : intervals_) {
    out += "[" + std::to_string(iv.lo);
    if (iv.hi != iv.lo) out += "," + std::to_string(iv.hi);
    out += "]";
  }
  return out;
}

namespace {

// Sorted antichains have strictly increasing left and right endpoints.
bool extend(int n, std::vector<Interval>& current, const std::function<bool(const IntervalSystem&)>& visit) {
  int lo0 = current.empty() ? 1 : current.back().lo + 1;
  for (int lo = lo0; lo <= n; ++lo) {
    int hi0 = std::max(lo, current.empty() ? 1 : current.back().hi + 1);
    for (int hi = hi0; hi <= n; ++hi) {
      current.push_back({lo, hi});
      if (!visit(IntervalSystem(n, current))) return false;
      if (!extend(n, current, visit)) return false;
      current.pop_back();
    }
  }
  return true;
}

}  // namespace

void for_each_interval_system(int n, const std::function<bool(const IntervalSystem&)>& visit) {
  if (n > 10) throw Error(Errc::SizeLimit, "interval systems are enumerated only for n <= 10");
  if (n < 0) throw Error(Errc::InvalidArgument, "negative ground set");
  if (!visit(IntervalSystem(n, {}))) return;
  std::vector<Interval> current;
  extend(n, current, visit);
}

std::vector<IntervalSystem> enumerate_interval_systems(int n) {
  std::vector<IntervalSystem> out;
  for_each_interval_system(n, [&](const IntervalSystem& I) {
    out.push_back(I);
    return true;
  });
  return out;
}

std::vector<RankSubset> blockers(const IntervalSystem& I) {
  std::vector<RankSubset> out;
  const std::uint32_t limit = std::uint32_t{1} << I.n();
  for (std::uint32_t bits = 0; bits < limit; ++bits) {
    auto S = RankSubset::from_bits(bits);
    if (I.blocked_by(S)) out.push_back(S);
  }
  return out;
}

bool is_even_set(RankSubset S) {
  if (S.empty()) return true;
  const auto runs = IntervalSystem::of_maximal_intervals(S.max(), S);
  for (const auto& iv : runs.intervals())
    if (iv.length() % 2 != 0) return false;
  return true;
}

}  // namespace flagcone
