#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace flagcone::detail {

// Fixed-size bitset sized at runtime; used for per-element reachability rows.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return bits_; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }

  Bitset& operator|=(const Bitset& other) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  // Calls f(i) for every i in [lo, hi) set in both a and b, in increasing order.
  template <class F>
  static void for_each_common(const Bitset& a, const Bitset& b, std::size_t lo, std::size_t hi, F&& f) {
    if (lo >= hi) return;
    std::size_t first = lo >> 6, last = (hi - 1) >> 6;
    for (std::size_t w = first; w <= last; ++w) {
      std::uint64_t word = a.words_[w] & b.words_[w];
      if (w == first) word &= ~std::uint64_t{0} << (lo & 63);
      if (w == last && (hi & 63) != 0) word &= ~(~std::uint64_t{0} << (hi & 63));
      while (word != 0) {
        f((w << 6) + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  template <class F>
  void for_each(std::size_t lo, std::size_t hi, F&& f) const {
    for_each_common(*this, *this, lo, hi, std::forward<F>(f));
  }

  static std::size_t count_common(const Bitset& a, const Bitset& b, std::size_t lo, std::size_t hi) {
    if (lo >= hi) return 0;
    std::size_t c = 0;
    std::size_t first = lo >> 6, last = (hi - 1) >> 6;
    for (std::size_t w = first; w <= last; ++w) {
      std::uint64_t word = a.words_[w] & b.words_[w];
      if (w == first) word &= ~std::uint64_t{0} << (lo & 63);
      if (w == last && (hi & 63) != 0) word &= ~(~std::uint64_t{0} << (hi & 63));
      c += static_cast<std::size_t>(std::popcount(word));
    }
    return c;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace flagcone::detail
