#pragma once

#include "flagcone/functional.hpp"
#include "flagcone/interval_system.hpp"

#include <optional>

namespace flagcone {

/// Σ_{S blocks I} a_S for an f-basis functional.
Rational blocking_sum(const LinearFunctional& a, const IntervalSystem& I);

enum class ValidationMode {
  Graded,  // a ≥ 0 on every graded poset
  RThick,  // a ≥ 0 on every r-thick poset
};

struct ValidationOptions {
  ValidationMode mode = ValidationMode::Graded;
  int r = 1;
  bool include_empty_system = true;
};

struct ValidationResult {
  bool valid = true;
  std::optional<IntervalSystem> violating;  // first failing system in enumeration order
  Rational violating_sum;
  Rational minimum_sum;  // over all systems checked
  std::size_t systems_checked = 0;
};

/// Blocking-sum test over every interval system on [1, n]. In RThick mode the
/// coefficients a_S / r^{n-|S|} are tested. L-basis input is converted first.
/// SizeLimit for n > 10.
ValidationResult validate_functional(const LinearFunctional& a, const ValidationOptions& options = {});

}  // namespace flagcone
