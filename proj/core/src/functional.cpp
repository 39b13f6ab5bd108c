#include "flagcone/functional.hpp"

#include <bit>
#include <cctype>
#include <optional>

namespace flagcone {

LinearFunctional::LinearFunctional(int rank, Basis basis, KParam k) : rank_(rank), basis_(basis), k_(k) {
  if (rank < 1) throw Error(Errc::InvalidArgument, "rank must be at least 1");
  if (rank - 1 > RankSubset::kMaxGround) throw Error(Errc::SizeLimit, "rank too large");
}

Rational LinearFunctional::coefficient(RankSubset S) const {
  auto it = coeffs_.find(S);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void LinearFunctional::set(RankSubset S, const Rational& value) {
  if (!S.is_subset_of(RankSubset::full(n())))
    throw Error(Errc::InvalidArgument, "subset " + S.to_braced() + " not inside [1," + std::to_string(n()) + "]");
  if (value == 0)
    coeffs_.erase(S);
  else
    coeffs_[S] = value;
}

void LinearFunctional::add(RankSubset S, const Rational& value) { set(S, coefficient(S) + value); }

LinearFunctional LinearFunctional::parse(std::string_view text, int rank, KParam k) {
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    return Error(Errc::ParseError, "functional '" + std::string(text) + "': " + why);
  };
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto digits = [&] {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return text.substr(start, i - start);
  };

  std::optional<Basis> basis;
  std::vector<std::pair<RankSubset, Rational>> terms;
  skip();
  if (i >= text.size()) throw fail("empty");
  bool first = true;
  while (true) {
    skip();
    if (i >= text.size()) break;
    Rational sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip();
    } else if (!first) {
      throw fail("expected + or -");
    }
    first = false;
    Rational coef = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::string num(digits());
      if (i < text.size() && text[i] == '/') {
        ++i;
        auto den = digits();
        if (den.empty()) throw fail("bad fraction");
        num += "/" + std::string(den);
      }
      coef = parse_rational(num);
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
    }
    if (i >= text.size() || (text[i] != 'f' && text[i] != 'L')) throw fail("expected f or L");
    Basis b = text[i] == 'f' ? Basis::F : Basis::L;
    if (basis && *basis != b) throw fail("mixed bases");
    basis = b;
    ++i;
    if (i < text.size() && text[i] == '_') ++i;
    RankSubset S;
    if (i < text.size() && text[i] == '{') {
      auto close = text.find('}', i);
      if (close == std::string_view::npos) throw fail("unclosed brace");
      S = RankSubset::parse(text.substr(i, close - i + 1));
      i = close + 1;
    } else {
      std::vector<int> members;
      for (char c : digits()) members.push_back(c - '0');
      S = RankSubset::of(members);
    }
    terms.emplace_back(S, sign * coef);
  }
  LinearFunctional out(rank, basis.value_or(Basis::F), k);
  for (auto& [S, c] : terms) out.add(S, c);
  return out;
}

std::string LinearFunctional::to_string() const {
  if (coeffs_.empty()) return "0";
  const char letter = basis_ == Basis::F ? 'f' : 'L';
  std::string out;
  for (const auto& [S, c] : coeffs_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1) out += to_exact_string(mag) + "*";
    out += letter;
    out += S.to_braced();
  }
  return out;
}

nlohmann::json LinearFunctional::to_json() const {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [S, c] : coeffs_) coeffs[S.to_string()] = to_exact_string(c);
  return {{"rank", rank_}, {"basis", basis_ == Basis::F ? "f" : "L"}, {"k", k_.to_string()}, {"coefficients", coeffs}};
}

LinearFunctional LinearFunctional::from_json(const nlohmann::json& j) {
  try {
    const auto basis_text = j.at("basis").get<std::string>();
    if (basis_text != "f" && basis_text != "L") throw Error(Errc::ParseError, "basis must be \"f\" or \"L\"");
    KParam k = j.contains("k") ? KParam::parse(j.at("k").get<std::string>()) : KParam::half();
    LinearFunctional out(j.at("rank").get<int>(), basis_text == "f" ? Basis::F : Basis::L, k);
    const auto& coeffs = j.at("coefficients");
    if (coeffs.is_object()) {
      for (const auto& [key, value] : coeffs.items())
        out.add(RankSubset::parse(key), parse_rational(value.is_string() ? value.get<std::string>() : value.dump()));
    } else {
      // [[subset, value], ...]
      for (const auto& pair : coeffs) {
        const auto& v = pair.at(1);
        out.add(RankSubset::parse(pair.at(0).get<std::string>()),
                parse_rational(v.is_string() ? v.get<std::string>() : v.dump()));
      }
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("functional JSON: ") + e.what());
  }
}

namespace {

void check_rank(const LinearFunctional& a, int rank) {
  if (a.rank() != rank)
    throw Error(Errc::RankMismatch, "functional has rank " + std::to_string(a.rank()) + ", vector has rank " +
                                        std::to_string(rank));
}

Rational dot(const LinearFunctional& a, const RationalVector& v) {
  Rational sum = 0;
  for (const auto& [S, c] : a.coefficients()) sum += c * v[S];
  return sum;
}

Rational power(const Rational& base, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

Rational evaluate(const LinearFunctional& a, const RationalVector& F) {
  check_rank(a, F.rank());
  if (a.basis() == Basis::F) return dot(a, F);
  return dot(a, l_vector(F, a.k()));
}

Rational evaluate(const LinearFunctional& a, const FlagVector& F) {
  check_rank(a, F.rank());
  if (a.basis() == Basis::F) {
    Rational sum = 0;
    for (const auto& [S, c] : a.coefficients()) sum += c * Rational(F[S]);
    return sum;
  }
  return dot(a, l_vector(F, a.k()));
}

Rational evaluate_on_l(const LinearFunctional& a, const LVector& L) {
  check_rank(a, L.rank());
  if (a.basis() == Basis::L) {
    if (a.k() != L.k()) throw Error(Errc::RankMismatch, "functional and L-vector use different k");
    return dot(a, L);
  }
  return dot(a, rational_f_from_l(L));
}

LinearFunctional change_basis(const LinearFunctional& a) {
  const int n = a.n();
  if (n > RationalVector::kMaxDenseGround) throw Error(Errc::SizeLimit, "change of basis needs n <= 20");
  const std::size_t size = std::size_t{1} << n, full = size - 1;
  std::vector<Rational> v(size);
  if (a.basis() == Basis::F) {
    // b_T = Σ_{S ⊆ [1,n]∖T} (2k)^{|S|} a_S
    for (const auto& [S, c] : a.coefficients()) v[S.bits()] = power(Rational(a.k().two_k()), S.size()) * c;
    for (int b = 0; b < n; ++b) {
      const std::size_t bit = std::size_t{1} << b;
      for (std::size_t u = 0; u < size; ++u)
        if (u & bit) v[u] += v[u ^ bit];
    }
    LinearFunctional out(a.rank(), Basis::L, a.k());
    for (std::size_t t = 0; t < size; ++t) out.set(RankSubset::from_bits(static_cast<std::uint32_t>(t)), v[full & ~t]);
    return out;
  }
  // a_U = (-1/2k)^{|U|} Σ_{T ⊇ [1,n]∖U} (-1)^{n-|T|} b_T
  for (const auto& [T, c] : a.coefficients()) v[T.bits()] = (n - T.size()) % 2 == 0 ? c : Rational(-c);
  for (int b = 0; b < n; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t u = 0; u < size; ++u)
      if (!(u & bit)) v[u] += v[u | bit];
  }
  const Rational w(-1, a.k().two_k());
  LinearFunctional out(a.rank(), Basis::F, a.k());
  for (std::size_t u = 0; u < size; ++u)
    out.set(RankSubset::from_bits(static_cast<std::uint32_t>(u)), power(w, std::popcount(u)) * v[full & ~u]);
  return out;
}

LinearFunctional convolve(const LinearFunctional& p, const LinearFunctional& q) {
  if (p.basis() != q.basis()) throw Error(Errc::RankMismatch, "convolution needs both functionals in one basis");
  if (p.basis() == Basis::L && p.k() != q.k()) throw Error(Errc::RankMismatch, "convolution needs equal k");
  const int rank = p.rank() + q.rank();
  if (rank - 1 > RankSubset::kMaxGround) throw Error(Errc::SizeLimit, "convolution rank too large");
  const int split = p.rank();  // rank of the cut in the product
  LinearFunctional out(rank, p.basis(), p.k());
  const Rational factor = p.basis() == Basis::F ? Rational(1) : Rational(p.k().two_k());
  for (const auto& [S, a] : p.coefficients())
    for (const auto& [T, b] : q.coefficients()) {
      auto U = S | T.shifted(split);
      if (p.basis() == Basis::F) U = U.with(split);
      out.add(U, factor * a * b);
    }
  return out;
}

LinearFunctional thick_rescaled(const LinearFunctional& a, int r) {
  if (a.basis() != Basis::F) throw Error(Errc::InvalidArgument, "thick rescaling is defined in the f-basis");
  if (r < 1) throw Error(Errc::InvalidArgument, "r must be positive");
  LinearFunctional out(a.rank(), Basis::F, a.k());
  for (const auto& [S, c] : a.coefficients()) out.set(S, c * power(Rational(r), a.n() - S.size()));
  return out;
}

}  // namespace flagcone
