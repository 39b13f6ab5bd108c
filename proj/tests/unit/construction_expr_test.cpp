#include "flagcone/construction_expr.hpp"
#include "flagcone/constructions.hpp"
#include "flagcone/flag_algebra.hpp"

#include <gtest/gtest.h>

using namespace flagcone;

TEST(IntPoly, ParseEvalPrint) {
  auto p = IntPoly::parse("N^3-N^2+2");
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.eval(3), 20);
  EXPECT_EQ(IntPoly::parse(p.to_string()), p);
  EXPECT_EQ(IntPoly::parse("2*N^2").eval(3), 18);
  EXPECT_EQ(IntPoly::parse("2N").eval(5), 10);
  EXPECT_EQ(IntPoly::parse("{N+1}"), IntPoly::parse("1+N"));
  EXPECT_TRUE(IntPoly::parse("7").is_constant());
  EXPECT_EQ(IntPoly().degree(), -1);
  EXPECT_THROW(IntPoly::parse("N^"), Error);
}

TEST(Dsl, BuildExamples) {
  auto d = evaluate(parse_construction("D2(C3)"));
  EXPECT_EQ(d.size(), 6u);
  EXPECT_EQ(evaluate(parse_construction("D[1,2]^2(C4)")).size(), 7u);
  auto g = evaluate(parse_construction("GLUE_P8(N=1)"));
  EXPECT_EQ(g.rank(), 8);
  EXPECT_TRUE(same_labelled_structure(g, glued_P(1)));
  EXPECT_EQ(evaluate(parse_construction("B(3)")).size(), 8u);
  EXPECT_EQ(evaluate(parse_construction("VD(B2)")).size(), 6u);
  EXPECT_EQ(evaluate(parse_construction("JOIN(C2, C3)")).rank(), 5);
}

TEST(Dsl, ChainedRangeOperators) {
  auto e = parse_construction("D[1,2]^{N+1} D[2,3]^{N+1} D[4,5]^{N+1} D[1,7]^{N} (C8)");
  EXPECT_TRUE(depends_on_N(e));
  EXPECT_EQ(degree_bound(e), 4);
  auto P = evaluate(e, {3, OperatorOrder::InnermostFirst});
  auto Q = apply_range_ops(chain(8), glue_parts(3, GlueVariant::Corrected)[0]);
  EXPECT_EQ(flag_f_vector(P), flag_f_vector(Q));
  EXPECT_THROW(evaluate(e), Error);  // N unset
}

TEST(Dsl, RoundTrips) {
  for (const char* text : {"C8", "B3", "D2(C4)", "D^{N+1}(C3)", "D[1,2]^{N+1} D[2,3]^{N} (C8)", "VD(D2(C3))",
                           "BIP(2,4)", "BH(7,[1,2][3,4])", "BH(7,[2,7],N^2)", "GLUE_P8", "GLUE_P8(N=2,printed)",
                           "JOIN(VD(C3),C4)"}) {
    auto e = parse_construction(text);
    EXPECT_EQ(parse_construction(to_string(e)), e) << text;
    EXPECT_EQ(construction_from_json(to_json(e)), e) << text;
  }
}

TEST(Dsl, Errors) {
  EXPECT_THROW(parse_construction("D[1,2]^2"), Error);
  EXPECT_THROW(parse_construction("X3"), Error);
  EXPECT_THROW(parse_construction("C8 C8"), Error);
  try {
    evaluate(parse_construction("D[1,9]^2(C4)"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::RangeOutOfBounds);
  }
  EXPECT_THROW(evaluate(parse_construction("D^{N-1}(C3)"), {1, OperatorOrder::InnermostFirst}), Error);
}

TEST(Dsl, OperatorOrderFlag) {
  // Both orders are accepted; on these overlapping ranges they agree.
  auto e = parse_construction("D[1,2]^2 D[2,3]^3 (C5)");
  auto inner = evaluate(e, {std::nullopt, OperatorOrder::InnermostFirst});
  auto outer = evaluate(e, {std::nullopt, OperatorOrder::OutermostFirst});
  EXPECT_EQ(inner.layer_size(2), 6u);
  EXPECT_EQ(outer.layer_size(2), 6u);
  EXPECT_EQ(inner.cover_count(), outer.cover_count());
  EXPECT_EQ(flag_f_vector(inner), flag_f_vector(outer));
  for (std::int64_t N = 1; N <= 3; ++N)
    EXPECT_EQ(flag_f_vector(glued_P(N)),
              flag_f_vector(glued_P(N, {GlueVariant::Corrected, OperatorOrder::OutermostFirst})));
}
