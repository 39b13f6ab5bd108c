#pragma once

#include "flagcone/construction_expr.hpp"
#include "flagcone/flag_algebra.hpp"

#include <functional>
#include <vector>

namespace flagcone {

/// Coefficients (low to high) of the unique polynomial of degree < xs.size()
/// through the points; xs must be distinct.
std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);
Rational evaluate_polynomial(const std::vector<Rational>& coeffs, const Rational& x);

struct LimitOptions {
  KParam k = KParam::half();
  int norm_exponent = 0;  // m: the limit of L_T / N^m is returned
  int held_out = 1;       // extra sample points used only for checking
  OperatorOrder order = OperatorOrder::InnermostFirst;
};

struct LimitResult {
  RationalVector limit;                         // degree-m coefficients
  std::vector<std::vector<Rational>> polynomials;  // L_T as a polynomial in N, by subset index
  int degree_bound = 0;
  std::vector<std::int64_t> samples;  // N values used for fitting
  std::vector<std::int64_t> checks;   // held-out N values
};

/// Fits every L_T of the family at N = 1..d+1 (d = degree bound), checks the
/// held-out points N = d+2.., and returns the coefficients of N^m.
/// DegreeExceeded if some L_T has a nonzero coefficient above N^m;
/// InterpolationMismatch if a held-out point disagrees.
LimitResult limit_l_vector(const std::function<GradedPoset(std::int64_t)>& family, int degree_bound,
                           const LimitOptions& options);
LimitResult limit_l_vector(const ConstructionExpr& family, const LimitOptions& options);

}  // namespace flagcone
