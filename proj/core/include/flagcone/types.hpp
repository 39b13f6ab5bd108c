#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flagcone {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

enum class Errc {
  NotGraded,
  NoUniqueExtremes,
  CycleDetected,
  NotComparable,
  SizeLimit,
  RangeOutOfBounds,
  NotRegular,
  NonIntegerResult,
  RankMismatch,
  NotThickEnough,
  DegreeExceeded,
  InterpolationMismatch,
  ParseError,
  InvalidArgument,
};

const char* to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// The parameter k of the k-Möbius function, stored as the positive integer 2k.
class KParam {
 public:
  explicit KParam(int two_k);

  /// Accepts "j/2", a plain integer "k", or "j/1".
  static KParam parse(std::string_view text);
  static KParam half() { return KParam(1); }
  static KParam one() { return KParam(2); }

  int two_k() const noexcept { return two_k_; }
  Rational value() const { return Rational(two_k_, 2); }
  KParam times(int l) const { return KParam(two_k_ * l); }
  std::string to_string() const;

  friend bool operator==(KParam, KParam) = default;

 private:
  int two_k_;
};

/// A subset of the rank range [1, n], stored as a bitmask (bit i-1 for rank i).
class RankSubset {
 public:
  static constexpr int kMaxGround = 30;

  constexpr RankSubset() = default;
  static constexpr RankSubset from_bits(std::uint32_t bits) {
    RankSubset s;
    s.bits_ = bits;
    return s;
  }
  static RankSubset of(std::initializer_list<int> members);
  static RankSubset of(const std::vector<int>& members);
  /// [lo, hi]; empty when lo > hi.
  static RankSubset interval(int lo, int hi);
  static RankSubset full(int n) { return interval(1, n); }
  /// Parses "1-3-5" (the CSV form) or "{1,3,5}"; "" and "{}" are the empty set.
  static RankSubset parse(std::string_view text);

  constexpr std::uint32_t bits() const noexcept { return bits_; }
  bool contains(int i) const noexcept { return i >= 1 && i <= kMaxGround && ((bits_ >> (i - 1)) & 1u); }
  int size() const noexcept;
  bool empty() const noexcept { return bits_ == 0; }
  int min() const;
  int max() const;
  std::vector<int> members() const;

  RankSubset with(int i) const;
  RankSubset without(int i) const;
  RankSubset complement(int n) const { return from_bits(full(n).bits_ & ~bits_); }
  /// Every member moved up by `offset` (which may be negative).
  RankSubset shifted(int offset) const;
  bool is_subset_of(RankSubset other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  bool intersects(RankSubset other) const noexcept { return (bits_ & other.bits_) != 0; }

  /// Sorted, dash-joined: "1-3-5"; the empty set prints as "".
  std::string to_string() const;
  /// Braced form used in human-readable reports: "{1,3,5}".
  std::string to_braced() const;

  friend constexpr RankSubset operator|(RankSubset a, RankSubset b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr RankSubset operator&(RankSubset a, RankSubset b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr bool operator==(RankSubset, RankSubset) = default;
  friend constexpr auto operator<=>(RankSubset a, RankSubset b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint32_t bits_ = 0;
};

/// Exact rational rendered as "p/q" (or "p" for integers).
std::string to_exact_string(const Rational& q);
std::string to_exact_string(const Integer& z);
Rational parse_rational(std::string_view text);

}  // namespace flagcone
