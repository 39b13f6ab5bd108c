#include "flagcone/validation.hpp"

namespace flagcone {

Rational blocking_sum(const LinearFunctional& a, const IntervalSystem& I) {
  if (a.basis() != Basis::F) throw Error(Errc::InvalidArgument, "blocking sums need an f-basis functional");
  if (a.n() != I.n()) throw Error(Errc::RankMismatch, "functional and interval system disagree on n");
  Rational sum = 0;
  for (const auto& [S, c] : a.coefficients())
    if (I.blocked_by(S)) sum += c;
  return sum;
}

ValidationResult validate_functional(const LinearFunctional& input, const ValidationOptions& options) {
  if (input.n() > 10) throw Error(Errc::SizeLimit, "validation enumerates interval systems only for n <= 10");
  LinearFunctional a = input.basis() == Basis::F ? input : change_basis(input);
  if (options.mode == ValidationMode::RThick) {
    if (options.r < 1) throw Error(Errc::InvalidArgument, "r must be positive");
    LinearFunctional scaled(a.rank(), Basis::F, a.k());
    for (const auto& [S, c] : a.coefficients()) {
      Integer denom = 1;
      for (int i = S.size(); i < a.n(); ++i) denom *= options.r;
      scaled.set(S, c / Rational(denom));
    }
    a = std::move(scaled);
  }

  ValidationResult out;
  bool first = true;
  for_each_interval_system(a.n(), [&](const IntervalSystem& I) {
    if (I.empty() && !options.include_empty_system) return true;
    auto sum = blocking_sum(a, I);
    ++out.systems_checked;
    if (first || sum < out.minimum_sum) out.minimum_sum = sum;
    first = false;
    if (sum < 0 && out.valid) {
      out.valid = false;
      out.violating = I;
      out.violating_sum = sum;
    }
    return true;
  });
  return out;
}

}  // namespace flagcone
