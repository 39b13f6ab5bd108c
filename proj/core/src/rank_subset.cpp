#include "flagcone/types.hpp"

#include <bit>
#include <cctype>

namespace flagcone {

namespace {

void check_member(int i) {
  if (i < 1 || i > RankSubset::kMaxGround)
    throw Error(Errc::RangeOutOfBounds, "rank " + std::to_string(i) + " outside [1, 30]");
}

}  // namespace

RankSubset RankSubset::of(std::initializer_list<int> members) {
  RankSubset s;
  for (int i : members) s = s.with(i);
  return s;
}

RankSubset RankSubset::of(const std::vector<int>& members) {
  RankSubset s;
  for (int i : members) s = s.with(i);
  return s;
}

RankSubset RankSubset::interval(int lo, int hi) {
  RankSubset s;
  for (int i = lo; i <= hi; ++i) s = s.with(i);
  return s;
}

RankSubset RankSubset::parse(std::string_view text) {
  RankSubset s;
  int current = -1;
  auto flush = [&] {
    if (current >= 0) s = s.with(current);
    current = -1;
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      current = (current < 0 ? 0 : current * 10) + (c - '0');
      if (current > kMaxGround) check_member(current);
    } else if (c == '-' || c == ',' || c == ' ' || c == '{' || c == '}') {
      flush();
    } else {
      throw Error(Errc::ParseError, "bad rank subset '" + std::string(text) + "'");
    }
  }
  flush();
  return s;
}

int RankSubset::size() const noexcept { return std::popcount(bits_); }

int RankSubset::min() const {
  if (bits_ == 0) throw Error(Errc::InvalidArgument, "min of empty rank subset");
  return std::countr_zero(bits_) + 1;
}

int RankSubset::max() const {
  if (bits_ == 0) throw Error(Errc::InvalidArgument, "max of empty rank subset");
  return 32 - std::countl_zero(bits_);
}

std::vector<int> RankSubset::members() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

RankSubset RankSubset::with(int i) const {
  check_member(i);
  return from_bits(bits_ | (1u << (i - 1)));
}

RankSubset RankSubset::without(int i) const {
  check_member(i);
  return from_bits(bits_ & ~(1u << (i - 1)));
}

RankSubset RankSubset::shifted(int offset) const {
  RankSubset s;
  for (int i : members()) s = s.with(i + offset);
  return s;
}

std::string RankSubset::to_string() const {
  std::string out;
  for (int i : members()) {
    if (!out.empty()) out += '-';
    out += std::to_string(i);
  }
  return out;
}

std::string RankSubset::to_braced() const {
  std::string out = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace flagcone
