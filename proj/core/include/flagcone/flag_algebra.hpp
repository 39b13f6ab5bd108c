#pragma once

#include "flagcone/poset.hpp"
#include "flagcone/types.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <vector>

namespace flagcone {

/// Dense table indexed by the subsets of [1, n] for a rank n+1 context.
/// Index = RankSubset::bits(). Materialized only for n <= 20.
template <class T>
class SubsetVector {
 public:
  static constexpr int kMaxDenseGround = 20;

  SubsetVector() = default;
  explicit SubsetVector(int rank) : rank_(rank) {
    if (rank < 1) throw Error(Errc::InvalidArgument, "rank must be at least 1");
    if (rank - 1 > kMaxDenseGround) throw Error(Errc::SizeLimit, "dense subset tables need n <= 20");
    values_.assign(std::size_t{1} << (rank - 1), T{});
  }

  int rank() const noexcept { return rank_; }
  int n() const noexcept { return rank_ - 1; }
  std::size_t size() const noexcept { return values_.size(); }

  T& operator[](RankSubset S) { return values_[index(S)]; }
  const T& operator[](RankSubset S) const { return values_[index(S)]; }
  T& at_index(std::size_t i) { return values_[i]; }
  const T& at_index(std::size_t i) const { return values_[i]; }
  const std::vector<T>& values() const noexcept { return values_; }

  friend bool operator==(const SubsetVector&, const SubsetVector&) = default;

 private:
  std::size_t index(RankSubset S) const {
    if (!S.is_subset_of(RankSubset::full(n())))
      throw Error(Errc::InvalidArgument, "subset " + S.to_braced() + " not inside [1," + std::to_string(n()) + "]");
    return S.bits();
  }

  int rank_ = 0;
  std::vector<T> values_;
};

/// f_S for every S ⊆ [1, n].
using FlagVector = SubsetVector<Integer>;
/// Arbitrary exact vector on the same index set (limit vectors, fixtures, images of maps).
using RationalVector = SubsetVector<Rational>;

/// L^{k,n+1}_S for every S. Need not come from a poset.
class LVector : public RationalVector {
 public:
  LVector() : k_(1) {}
  LVector(int rank, KParam k) : RationalVector(rank), k_(k) {}
  LVector(RationalVector values, KParam k) : RationalVector(std::move(values)), k_(k) {}
  KParam k() const noexcept { return k_; }

 private:
  KParam k_;
};

/// Counts S-chains for every S by dynamic programming over comparable pairs.
FlagVector flag_f_vector(const GradedPoset& P);

RationalVector to_rational(const FlagVector& F);

/// L_S = (-1)^{n-|S|} Σ_{T ⊇ [1,n]∖S} (-1/2k)^{|T|} f_T, via a superset-sum transform.
LVector l_vector(const RationalVector& F, KParam k);
LVector l_vector(const FlagVector& F, KParam k);

/// f_S = (2k)^{|S|} Σ_{T ⊆ [1,n]∖S} L_T, via a subset-sum transform.
RationalVector rational_f_from_l(const LVector& L);
/// NonIntegerResult unless every entry is an integer.
FlagVector f_from_l(const LVector& L);

/// Entrywise scaling by (r/q)^{|S|}.
RationalVector alpha_map(int q, int r, const RationalVector& F);
RationalVector alpha_map(int q, int r, const FlagVector& F);

/// Word over {c, e} of length n with e at the positions in T.
std::string ce_word(RankSubset T, int n);

struct CeIndex {
  int rank = 1;
  std::map<std::string, Rational> coefficients;  // every word, zero or not
  bool is_c_ee_polynomial = true;                 // no coefficient on a non-even e-set
};
CeIndex ce_index(const FlagVector& F, KParam k);

/// CSV with header "subset,value"; subsets dash-joined in bitmask order.
std::string to_csv(const RationalVector& v);
std::string to_csv(const FlagVector& v);
nlohmann::json to_json(const RationalVector& v);
nlohmann::json to_json(const FlagVector& v);
nlohmann::json to_json(const LVector& v);

}  // namespace flagcone
