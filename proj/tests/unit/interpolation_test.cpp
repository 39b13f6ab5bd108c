#include "flagcone/constructions.hpp"
#include "flagcone/interpolation.hpp"
#include "flagcone/interval_system.hpp"

#include <gtest/gtest.h>

using namespace flagcone;

TEST(Interpolate, RecoversPolynomial) {
  // 3N^3 - N/2 + 7
  std::vector<Rational> xs, ys;
  for (int x = 1; x <= 4; ++x) {
    xs.emplace_back(x);
    ys.push_back(Rational(3 * x * x * x) - Rational(x, 2) + 7);
  }
  auto c = interpolate(xs, ys);
  EXPECT_EQ(c, (std::vector<Rational>{7, Rational(-1, 2), 0, 3}));
  EXPECT_EQ(evaluate_polynomial(c, 10), Rational(3000) - 5 + 7);
  EXPECT_THROW(interpolate({1, 1}, {2, 3}), Error);
}

TEST(Limit, TableExamples) {
  auto unit = limit_l_vector(parse_construction("BH(7,{})"), {});
  for (std::size_t s = 0; s < unit.limit.size(); ++s) EXPECT_EQ(unit.limit.at_index(s), s == 0 ? 1 : 0);

  LimitOptions one;
  one.norm_exponent = 1;
  auto r = limit_l_vector(parse_construction("BH(7,[2,7])"), one);
  for (std::size_t s = 0; s < r.limit.size(); ++s) {
    const auto S = RankSubset::from_bits(static_cast<std::uint32_t>(s));
    const int expected = S.empty() ? 1 : S == RankSubset::interval(2, 7) ? -1 : 0;
    EXPECT_EQ(r.limit.at_index(s), expected) << S.to_braced();
  }
}

TEST(Limit, ClosedFormOnEvenSets) {
  // For even S, the family D^N over the maximal intervals of S has limit
  // (-1)^j on unions of j of those intervals and 0 elsewhere.
  const int n = 5;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    const auto S = RankSubset::from_bits(bits);
    if (!is_even_set(S)) continue;
    const auto I = IntervalSystem::of_maximal_intervals(n, S);
    LimitOptions opts;
    opts.norm_exponent = static_cast<int>(I.size());
    auto res = limit_l_vector([&](std::int64_t N) { return bh_poset(n, I, static_cast<int>(N)); },
                              static_cast<int>(I.size()), opts);
    for (std::uint32_t t = 0; t < (1u << n); ++t) {
      int j = -1;
      // T must be a union of some of the intervals
      std::uint32_t covered = 0;
      int used = 0;
      for (const auto& iv : I.intervals()) {
        const auto m = iv.members().bits();
        if ((t & m) == m) {
          covered |= m;
          ++used;
        }
      }
      if (covered == t) j = used;
      const Rational expected = j < 0 ? Rational(0) : Rational(j % 2 ? -1 : 1);
      EXPECT_EQ(res.limit.at_index(t), expected) << S.to_braced() << " at " << RankSubset::from_bits(t).to_braced();
    }
  }
}

TEST(Limit, DegreeExceeded) {
  // L_∅ of D^N C3 grows like N^2 at k = 1/2.
  LimitOptions opts;
  opts.norm_exponent = 1;
  try {
    limit_l_vector(parse_construction("D^{N}(C3)"), opts);
    FAIL() << "expected DegreeExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegreeExceeded);
  }
}

TEST(Limit, InterpolationMismatch) {
  // Claiming degree 1 for a quadratic family is caught by the held-out point.
  LimitOptions opts;
  opts.norm_exponent = 1;
  try {
    limit_l_vector([](std::int64_t N) { return thicken(chain(3), static_cast<int>(N)); }, 1, opts);
    FAIL() << "expected InterpolationMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InterpolationMismatch);
  }
}

TEST(Limit, SampleSchedule) {
  LimitOptions opts;
  opts.norm_exponent = 2;
  auto r = limit_l_vector(parse_construction("BH(7,[1,2][3,4])"), opts);
  EXPECT_EQ(r.degree_bound, 2);
  EXPECT_EQ(r.samples, (std::vector<std::int64_t>{1, 2, 3}));
  EXPECT_EQ(r.checks, (std::vector<std::int64_t>{4}));
}
