#include "flagcone/flag_algebra.hpp"
#include "flagcone/interval_system.hpp"

#include <bit>

namespace flagcone {

namespace {

__extension__ typedef unsigned __int128 u128;

// g[x][T] = number of chains 0̂ < y_1 < ... < y_j < x with rank set T ⊆ [1, ρ(x)-1].
// The top row is the flag vector.
template <class V>
std::vector<V> chain_table(const GradedPoset& P) {
  std::vector<std::vector<V>> g(P.size());
  for (Element x = 1; x < P.size(); ++x) {
    const int rx = P.rank_of(x);
    auto& row = g[x];
    row.assign(std::size_t{1} << (rx - 1), V{0});
    row[0] = V{1};
    for (int r = 1; r < rx; ++r) {
      const std::size_t width = std::size_t{1} << (r - 1);
      const std::size_t bit = width;
      P.below(x).for_each(P.layer_begin(r), P.layer_end(r), [&](std::size_t y) {
        const auto& src = g[y];
        for (std::size_t t = 0; t < width; ++t)
          if (src[t] != 0) row[t | bit] += src[t];
      });
    }
  }
  return std::move(g[P.top()]);
}

bool fits_in_128(const GradedPoset& P) {
  Integer bound = 1;
  for (int r = 1; r <= P.n(); ++r) bound *= P.layer_size(r);
  return bound < (Integer(1) << 125);
}

Integer to_integer(u128 v) {
  Integer hi = static_cast<std::uint64_t>(v >> 64);
  return (hi << 64) + Integer(static_cast<std::uint64_t>(v));
}

Rational power(Rational base, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

FlagVector flag_f_vector(const GradedPoset& P) {
  FlagVector F(P.rank());
  if (fits_in_128(P)) {
    auto row = chain_table<u128>(P);
    for (std::size_t i = 0; i < row.size(); ++i) F.at_index(i) = to_integer(row[i]);
  } else {
    auto row = chain_table<Integer>(P);
    for (std::size_t i = 0; i < row.size(); ++i) F.at_index(i) = std::move(row[i]);
  }
  return F;
}

RationalVector to_rational(const FlagVector& F) {
  RationalVector out(F.rank());
  for (std::size_t i = 0; i < F.size(); ++i) out.at_index(i) = Rational(F.at_index(i));
  return out;
}

LVector l_vector(const RationalVector& F, KParam k) {
  const int n = F.n();
  const std::size_t full = F.size() - 1;
  const Rational w = Rational(-1, k.two_k());
  std::vector<Rational> powers(static_cast<std::size_t>(n) + 1);
  powers[0] = 1;
  for (int i = 1; i <= n; ++i) powers[static_cast<std::size_t>(i)] = powers[static_cast<std::size_t>(i) - 1] * w;

  std::vector<Rational> z(F.size());
  for (std::size_t t = 0; t < F.size(); ++t)
    z[t] = powers[static_cast<std::size_t>(std::popcount(t))] * F.at_index(t);
  for (int b = 0; b < n; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t u = 0; u < z.size(); ++u)
      if (!(u & bit)) z[u] += z[u | bit];
  }
  LVector L(F.rank(), k);
  for (std::size_t s = 0; s < F.size(); ++s) {
    auto& out = L.at_index(s);
    out = z[full & ~s];
    if ((n - std::popcount(s)) % 2 != 0) out = -out;
  }
  return L;
}

LVector l_vector(const FlagVector& F, KParam k) { return l_vector(to_rational(F), k); }

RationalVector rational_f_from_l(const LVector& L) {
  const int n = L.n();
  const std::size_t full = L.size() - 1;
  std::vector<Rational> y(L.values());
  for (int b = 0; b < n; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t u = 0; u < y.size(); ++u)
      if (u & bit) y[u] += y[u ^ bit];
  }
  RationalVector F(L.rank());
  for (std::size_t s = 0; s < L.size(); ++s)
    F.at_index(s) = power(Rational(L.k().two_k()), std::popcount(s)) * y[full & ~s];
  return F;
}

FlagVector f_from_l(const LVector& L) {
  auto q = rational_f_from_l(L);
  FlagVector F(L.rank());
  for (std::size_t s = 0; s < q.size(); ++s) {
    const auto& v = q.at_index(s);
    if (denominator(v) != 1)
      throw Error(Errc::NonIntegerResult, "entry " + RankSubset::from_bits(static_cast<std::uint32_t>(s)).to_braced() +
                                              " = " + to_exact_string(v) + " is not an integer");
    F.at_index(s) = numerator(v);
  }
  return F;
}

RationalVector alpha_map(int q, int r, const RationalVector& F) {
  if (q < 1 || r < 1) throw Error(Errc::InvalidArgument, "alpha map needs positive q and r");
  RationalVector out(F.rank());
  const Rational ratio(r, q);
  for (std::size_t s = 0; s < F.size(); ++s) out.at_index(s) = power(ratio, std::popcount(s)) * F.at_index(s);
  return out;
}

RationalVector alpha_map(int q, int r, const FlagVector& F) { return alpha_map(q, r, to_rational(F)); }

std::string ce_word(RankSubset T, int n) {
  std::string w(static_cast<std::size_t>(n), 'c');
  for (int i : T.members()) w[static_cast<std::size_t>(i) - 1] = 'e';
  return w;
}

CeIndex ce_index(const FlagVector& F, KParam k) {
  auto L = l_vector(F, k);
  CeIndex out;
  out.rank = F.rank();
  for (std::size_t s = 0; s < L.size(); ++s) {
    auto T = RankSubset::from_bits(static_cast<std::uint32_t>(s));
    const auto& v = L.at_index(s);
    out.coefficients.emplace(ce_word(T, F.n()), v);
    if (v != 0 && !is_even_set(T)) out.is_c_ee_polynomial = false;
  }
  return out;
}

namespace {

template <class V>
std::string csv_of(const SubsetVector<V>& v) {
  std::string out = "subset,value\n";
  for (std::size_t s = 0; s < v.size(); ++s)
    out += RankSubset::from_bits(static_cast<std::uint32_t>(s)).to_string() + "," + to_exact_string(v.at_index(s)) +
           "\n";
  return out;
}

template <class V>
nlohmann::json json_of(const SubsetVector<V>& v) {
  nlohmann::json entries = nlohmann::json::object();
  for (std::size_t s = 0; s < v.size(); ++s)
    entries[RankSubset::from_bits(static_cast<std::uint32_t>(s)).to_string()] = to_exact_string(v.at_index(s));
  return {{"rank", v.rank()}, {"entries", entries}};
}

}  // namespace

std::string to_csv(const RationalVector& v) { return csv_of(v); }
std::string to_csv(const FlagVector& v) { return csv_of(v); }
nlohmann::json to_json(const RationalVector& v) { return json_of(v); }
nlohmann::json to_json(const FlagVector& v) { return json_of(v); }
nlohmann::json to_json(const LVector& v) {
  auto j = json_of<Rational>(v);
  j["k"] = v.k().to_string();
  return j;
}

}  // namespace flagcone
