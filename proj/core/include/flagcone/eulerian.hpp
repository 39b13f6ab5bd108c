#pragma once

#include "flagcone/flag_algebra.hpp"
#include "flagcone/poset.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace flagcone {

/// μ_k on every comparable pair, filled eagerly one lower endpoint at a time.
class MoebiusTable {
 public:
  MoebiusTable(const GradedPoset& P, KParam k);

  KParam k() const noexcept { return k_; }
  /// μ_k([x, y]); NotComparable unless x <= y.
  const Rational& operator()(Element x, Element y) const;
  const Rational& full() const { return (*this)(0, top_); }

 private:
  KParam k_;
  Element top_ = 0;
  // rows_[x] holds (y, μ_k([x, y])) for y >= x, sorted by y.
  std::vector<std::vector<std::pair<Element, Rational>>> rows_;
};

MoebiusTable moebius_k(const GradedPoset& P, KParam k);

/// -Σ_S (-1/k)^{|S|} f_S(P), from the flag vector of P.
Rational moebius_k_hall(const GradedPoset& P, KParam k);
Rational moebius_k_hall(const FlagVector& F, KParam k);

enum class EulerMethod {
  Definition,  // μ_k([x, y]) = (-1)^{ρ(x,y)} on every interval
  LocalL,      // L^k_{[1, ρ-1]}([x, y]) = 0 on every interval of positive even rank
  Mu2k,        // μ_{2k}([x, y]) = 0 on every interval of positive even rank
};
const char* to_string(EulerMethod m) noexcept;

struct IntervalWitness {
  std::int64_t x = 0;  // element ids
  std::int64_t y = 0;
  int rank = 0;
  Rational value;
  Rational expected;
  std::string quantity;  // what `value` measures
};

struct Verdict {
  bool holds = true;
  std::optional<IntervalWitness> witness;  // first failing interval in (x, y) element order
};

Verdict is_k_eulerian(const GradedPoset& P, KParam k, EulerMethod method = EulerMethod::Definition);

/// Rank-parity test for k = 1/2: in [x, y] of odd rank the elements of even and
/// odd relative rank balance; of even rank there is one more even element.
Verdict is_half_eulerian_parity(const GradedPoset& P);

struct DSResidual {
  RankSubset S;
  int i = 0;  // maximal gap [i, l] of [1, n] ∖ S
  int l = 0;
  Rational residual;
};

struct DSReport {
  int rank = 1;
  KParam k{1};
  std::vector<DSResidual> residuals;                    // every (S, gap) pair
  std::vector<std::pair<RankSubset, Rational>> noneven;  // L_S for every non-even S
  bool all_zero_f = true;
  bool all_zero_l = true;

  nlohmann::json to_json() const;
};

DSReport ds_residuals(const FlagVector& F, KParam k);

/// Σ_{i=1}^{n} (-1)^{i-1} f_i.
Integer alternating_rank_sum(const FlagVector& F);
/// k (1 - (-1)^n), the value the alternating sum takes on k-Eulerian posets.
Rational eulerian_alternating_value(int n, KParam k);

nlohmann::json to_json(const Verdict& v);

}  // namespace flagcone
