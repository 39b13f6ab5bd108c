#pragma once

#include "flagcone/types.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace flagcone {

/// Integer polynomial in the formal parameter N, coefficients low to high.
class IntPoly {
 public:
  IntPoly() = default;
  static IntPoly constant(std::int64_t c);
  static IntPoly variable();  // N
  /// "N^3-N^2+2", "N+1", "2N", "2*N^2", "7".
  static IntPoly parse(std::string_view text);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  Integer eval(const Integer& N) const;
  std::string to_string() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

}  // namespace flagcone
