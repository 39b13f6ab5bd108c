#include "flagcone/interpolation.hpp"

namespace flagcone {

std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw Error(Errc::InvalidArgument, "interpolation needs matching points");
  const std::size_t m = xs.size();
  // Newton divided differences, then expansion into the monomial basis.
  std::vector<Rational> dd(ys);
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i) {
      const Rational gap = xs[i] - xs[i - level];
      if (gap == 0) throw Error(Errc::InvalidArgument, "interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  std::vector<Rational> coeffs(m, Rational(0));
  for (std::size_t i = m; i-- > 0;) {
    // coeffs = coeffs * (x - xs[i]) + dd[i]
    for (std::size_t d = m - 1; d > 0; --d) coeffs[d] = coeffs[d - 1] - xs[i] * coeffs[d];
    coeffs[0] = dd[i] - xs[i] * coeffs[0];
  }
  return coeffs;
}

Rational evaluate_polynomial(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
  return v;
}

LimitResult limit_l_vector(const std::function<GradedPoset(std::int64_t)>& family, int degree_bound,
                           const LimitOptions& options) {
  if (degree_bound < 0) throw Error(Errc::InvalidArgument, "negative degree bound");
  if (options.norm_exponent < 0) throw Error(Errc::InvalidArgument, "negative normalization exponent");
  LimitResult out;
  out.degree_bound = degree_bound;
  const int fit = degree_bound + 1;

  std::vector<LVector> values;
  std::vector<Rational> xs;
  int rank = 0;
  for (int i = 1; i <= fit + options.held_out; ++i) {
    const std::int64_t N = i;
    auto P = family(N);
    if (rank == 0) rank = P.rank();
    if (P.rank() != rank) throw Error(Errc::RankMismatch, "family changes rank with N");
    values.push_back(l_vector(flag_f_vector(P), options.k));
    (i <= fit ? out.samples : out.checks).push_back(N);
    xs.emplace_back(N);
  }

  const std::vector<Rational> fit_x(xs.begin(), xs.begin() + fit);
  out.limit = RationalVector(rank);
  out.polynomials.resize(out.limit.size());
  for (std::size_t s = 0; s < out.limit.size(); ++s) {
    std::vector<Rational> ys;
    for (int i = 0; i < fit; ++i) ys.push_back(values[static_cast<std::size_t>(i)].at_index(s));
    auto coeffs = interpolate(fit_x, ys);
    const auto subset = RankSubset::from_bits(static_cast<std::uint32_t>(s)).to_braced();
    for (std::size_t c = static_cast<std::size_t>(fit); c < xs.size(); ++c) {
      if (evaluate_polynomial(coeffs, xs[c]) != values[c].at_index(s))
        throw Error(Errc::InterpolationMismatch,
                    "L" + subset + " at N=" + to_exact_string(xs[c]) + " is off the fitted polynomial");
    }
    for (std::size_t d = static_cast<std::size_t>(options.norm_exponent) + 1; d < coeffs.size(); ++d)
      if (coeffs[d] != 0)
        throw Error(Errc::DegreeExceeded, "L" + subset + " grows like N^" + std::to_string(d) + ", faster than N^" +
                                              std::to_string(options.norm_exponent));
    const auto m = static_cast<std::size_t>(options.norm_exponent);
    out.limit.at_index(s) = m < coeffs.size() ? coeffs[m] : Rational(0);
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    out.polynomials[s] = std::move(coeffs);
  }
  return out;
}

LimitResult limit_l_vector(const ConstructionExpr& family, const LimitOptions& options) {
  return limit_l_vector(
      [&](std::int64_t N) { return evaluate(family, EvalOptions{N, options.order}); }, degree_bound(family), options);
}

}  // namespace flagcone
