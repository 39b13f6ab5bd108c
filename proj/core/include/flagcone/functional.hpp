#pragma once

#include "flagcone/flag_algebra.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>

namespace flagcone {

enum class Basis { F, L };

/// Σ a_S f_S (Basis::F) or Σ a_S L^k_S (Basis::L) on posets of the given rank.
/// Zero coefficients are never stored.
class LinearFunctional {
 public:
  LinearFunctional(int rank, Basis basis, KParam k = KParam::half());

  int rank() const noexcept { return rank_; }
  int n() const noexcept { return rank_ - 1; }
  Basis basis() const noexcept { return basis_; }
  KParam k() const noexcept { return k_; }
  const std::map<RankSubset, Rational>& coefficients() const noexcept { return coeffs_; }

  Rational coefficient(RankSubset S) const;
  void set(RankSubset S, const Rational& value);
  void add(RankSubset S, const Rational& value);

  /// "f13 - f1", "L45 + 2*L{1,2,3}", "-1/2 f{}"; digits after f/L name single ranks.
  /// The basis is taken from the letter; mixing letters is a ParseError.
  static LinearFunctional parse(std::string_view text, int rank, KParam k = KParam::half());
  std::string to_string() const;

  nlohmann::json to_json() const;
  static LinearFunctional from_json(const nlohmann::json& j);

  friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;

 private:
  int rank_;
  Basis basis_;
  KParam k_;
  std::map<RankSubset, Rational> coeffs_;
};

/// Value on a flag vector; L-basis functionals first transform F with their k.
Rational evaluate(const LinearFunctional& a, const RationalVector& F);
Rational evaluate(const LinearFunctional& a, const FlagVector& F);
/// Value on an L-vector (which need not come from a poset); f-basis functionals invert it first.
Rational evaluate_on_l(const LinearFunctional& a, const LVector& L);

/// Re-expresses a in the other basis with the same k; values agree on every flag vector.
LinearFunctional change_basis(const LinearFunctional& a);

/// p * q of ranks m+1 and n+1, giving rank m+n+2. RankMismatch when the bases or k differ.
LinearFunctional convolve(const LinearFunctional& p, const LinearFunctional& q);

/// Σ a_S r^{n-|S|} f_S, the form that is nonnegative on r-thick posets when a is valid.
LinearFunctional thick_rescaled(const LinearFunctional& a, int r);

}  // namespace flagcone
