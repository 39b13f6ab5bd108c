#include "flagcone/eulerian.hpp"
#include "flagcone/interval_system.hpp"

#include <algorithm>
#include <bit>

namespace flagcone {

namespace {

// Calls visit(x, row) where row[y] = μ_k([x, y]) for every y > x (other slots unspecified).
template <class Visit>
void for_each_moebius_row(const GradedPoset& P, KParam k, Visit&& visit) {
  const std::size_t m = P.size();
  const Rational inv_k(2, k.two_k());
  std::vector<Rational> row(m);
  for (Element x = 0; x < m; ++x) {
    P.above(x).for_each(0, m, [&](std::size_t y) {
      Rational sum = 0;
      detail::Bitset::for_each_common(P.above(x), P.below(static_cast<Element>(y)), 0, m,
                                      [&](std::size_t z) { sum += row[z]; });
      row[y] = -1 - inv_k * sum;
    });
    if (!visit(x, static_cast<const std::vector<Rational>&>(row))) return;
  }
}

Rational sign_of_rank(int rho) { return rho % 2 == 0 ? Rational(1) : Rational(-1); }

Rational power(const Rational& base, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

MoebiusTable::MoebiusTable(const GradedPoset& P, KParam k) : k_(k), top_(P.top()), rows_(P.size()) {
  for_each_moebius_row(P, k, [&](Element x, const std::vector<Rational>& row) {
    auto& out = rows_[x];
    out.reserve(P.above(x).count() + 1);
    out.emplace_back(x, Rational(1));
    P.above(x).for_each(0, P.size(), [&](std::size_t y) { out.emplace_back(static_cast<Element>(y), row[y]); });
    return true;
  });
}

const Rational& MoebiusTable::operator()(Element x, Element y) const {
  if (x >= rows_.size()) throw Error(Errc::NotComparable, "element out of range");
  const auto& r = rows_[x];
  auto it = std::lower_bound(r.begin(), r.end(), y, [](const auto& e, Element v) { return e.first < v; });
  if (it == r.end() || it->first != y) throw Error(Errc::NotComparable, "elements are not comparable");
  return it->second;
}

MoebiusTable moebius_k(const GradedPoset& P, KParam k) { return MoebiusTable(P, k); }

Rational moebius_k_hall(const FlagVector& F, KParam k) {
  const Rational w(-2, k.two_k());
  Rational sum = 0;
  for (std::size_t s = 0; s < F.size(); ++s) sum += power(w, std::popcount(s)) * Rational(F.at_index(s));
  return -sum;
}

Rational moebius_k_hall(const GradedPoset& P, KParam k) { return moebius_k_hall(flag_f_vector(P), k); }

const char* to_string(EulerMethod m) noexcept {
  switch (m) {
    case EulerMethod::Definition: return "definition";
    case EulerMethod::LocalL: return "local_L";
    case EulerMethod::Mu2k: return "mu_2k";
  }
  return "?";
}

Verdict is_k_eulerian(const GradedPoset& P, KParam k, EulerMethod method) {
  Verdict v;
  auto fail = [&](Element x, Element y, Rational value, Rational expected, std::string quantity) {
    v.holds = false;
    v.witness = IntervalWitness{P.id(x), P.id(y), P.rank_of(y) - P.rank_of(x), std::move(value), std::move(expected),
                                std::move(quantity)};
  };
  switch (method) {
    case EulerMethod::Definition:
      for_each_moebius_row(P, k, [&](Element x, const std::vector<Rational>& row) {
        bool ok = true;
        P.above(x).for_each(0, P.size(), [&](std::size_t y) {
          if (!ok) return;
          auto expected = sign_of_rank(P.rank_of(static_cast<Element>(y)) - P.rank_of(x));
          if (row[y] != expected) {
            fail(x, static_cast<Element>(y), row[y], expected, "mu_" + k.to_string());
            ok = false;
          }
        });
        return ok;
      });
      break;
    case EulerMethod::Mu2k:
      for_each_moebius_row(P, k.times(2), [&](Element x, const std::vector<Rational>& row) {
        bool ok = true;
        P.above(x).for_each(0, P.size(), [&](std::size_t y) {
          if (!ok || (P.rank_of(static_cast<Element>(y)) - P.rank_of(x)) % 2 != 0) return;
          if (row[y] != 0) {
            fail(x, static_cast<Element>(y), row[y], 0, "mu_" + k.times(2).to_string());
            ok = false;
          }
        });
        return ok;
      });
      break;
    case EulerMethod::LocalL:
      for (Element x = 0; x < P.size() && v.holds; ++x)
        P.above(x).for_each(0, P.size(), [&](std::size_t yy) {
          auto y = static_cast<Element>(yy);
          const int rho = P.rank_of(y) - P.rank_of(x);
          if (!v.holds || rho % 2 != 0) return;
          auto L = l_vector(flag_f_vector(closed_interval(P, x, y)), k);
          const auto& value = L[RankSubset::full(rho - 1)];
          if (value != 0) fail(x, y, value, 0, "L^" + k.to_string() + "_[1," + std::to_string(rho - 1) + "]");
        });
      break;
  }
  return v;
}

Verdict is_half_eulerian_parity(const GradedPoset& P) {
  Verdict v;
  const std::size_t m = P.size();
  for (Element x = 0; x < m && v.holds; ++x)
    P.above(x).for_each(0, m, [&](std::size_t yy) {
      if (!v.holds) return;
      auto y = static_cast<Element>(yy);
      const int rho = P.rank_of(y) - P.rank_of(x);
      std::int64_t even = 1, odd = 0;  // x itself has relative rank 0
      (rho % 2 == 0 ? even : odd) += 1;
      for (int r = P.rank_of(x) + 1; r < P.rank_of(y); ++r) {
        auto c = static_cast<std::int64_t>(
            detail::Bitset::count_common(P.above(x), P.below(y), P.layer_begin(r), P.layer_end(r)));
        ((r - P.rank_of(x)) % 2 == 0 ? even : odd) += c;
      }
      const std::int64_t expected = rho % 2 == 0 ? odd + 1 : odd;
      if (even != expected) {
        v.holds = false;
        v.witness = IntervalWitness{P.id(x), P.id(y), rho, Rational(even), Rational(expected),
                                    "elements of even relative rank"};
      }
    });
  return v;
}

DSReport ds_residuals(const FlagVector& F, KParam k) {
  DSReport out;
  out.rank = F.rank();
  out.k = k;
  const int n = F.n();
  const Rational kv = k.value();
  for (std::size_t s = 0; s < F.size(); ++s) {
    auto S = RankSubset::from_bits(static_cast<std::uint32_t>(s));
    for (int i = 1; i <= n; ++i) {
      if (S.contains(i)) continue;
      int l = i;
      while (l + 1 <= n && !S.contains(l + 1)) ++l;
      Rational res = kv * Rational((i % 2 == 1 ? 1 : -1) + (l % 2 == 1 ? 1 : -1)) * Rational(F[S]);
      for (int j = i; j <= l; ++j) res += (j % 2 == 0 ? 1 : -1) * Rational(F[S.with(j)]);
      if (res != 0) out.all_zero_f = false;
      out.residuals.push_back({S, i, l, std::move(res)});
      i = l;
    }
  }
  auto L = l_vector(F, k);
  for (std::size_t s = 0; s < L.size(); ++s) {
    auto S = RankSubset::from_bits(static_cast<std::uint32_t>(s));
    if (is_even_set(S)) continue;
    if (L.at_index(s) != 0) out.all_zero_l = false;
    out.noneven.emplace_back(S, L.at_index(s));
  }
  return out;
}

nlohmann::json DSReport::to_json() const {
  nlohmann::json res = nlohmann::json::array();
  for (const auto& r : residuals)
    res.push_back({{"S", r.S.to_string()}, {"gap", {r.i, r.l}}, {"residual", to_exact_string(r.residual)}});
  nlohmann::json ne = nlohmann::json::object();
  for (const auto& [S, v] : noneven) ne[S.to_string()] = to_exact_string(v);
  return {{"rank", rank},          {"k", k.to_string()},         {"residuals", res},
          {"noneven_l", ne},       {"all_zero_f", all_zero_f}, {"all_zero_l", all_zero_l}};
}

Integer alternating_rank_sum(const FlagVector& F) {
  Integer sum = 0;
  for (int i = 1; i <= F.n(); ++i) {
    if (i % 2 == 1)
      sum += F[RankSubset::of({i})];
    else
      sum -= F[RankSubset::of({i})];
  }
  return sum;
}

Rational eulerian_alternating_value(int n, KParam k) { return n % 2 == 0 ? Rational(0) : 2 * k.value(); }

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j = {{"holds", v.holds}};
  if (v.witness) {
    const auto& w = *v.witness;
    j["witness"] = {{"x", w.x},
                    {"y", w.y},
                    {"rank", w.rank},
                    {"quantity", w.quantity},
                    {"value", to_exact_string(w.value)},
                    {"expected", to_exact_string(w.expected)}};
  }
  return j;
}

}  // namespace flagcone
