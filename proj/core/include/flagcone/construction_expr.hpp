#pragma once

#include "flagcone/constructions.hpp"
#include "flagcone/int_poly.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace flagcone {

/// Syntax tree of a poset construction. Multiplicities may depend on N.
struct ConstructionExpr {
  enum class Kind { Chain, Boolean, Thicken, ThickenRange, VerticalDouble, Bipartite, BhPoset, GlueP8, Join };

  Kind kind = Kind::Chain;
  int a = 0;            // Chain: rank; Boolean: n; ThickenRange: u; Bipartite: m; BhPoset: n
  int b = 0;            // ThickenRange: v; Bipartite: rank
  IntPoly multiplicity;  // Thicken, ThickenRange, BhPoset; GlueP8: the value of N
  IntervalSystem intervals;                         // BhPoset
  GlueVariant variant = GlueVariant::Corrected;     // GlueP8
  std::vector<ConstructionExpr> args;               // operands

  friend bool operator==(const ConstructionExpr&, const ConstructionExpr&) = default;
};

/// Grammar, whitespace insensitive:
///   C8 | C(8) | B3 | B(3) | D2(P) | D^{N+1}(P) | D[u,v]^{r} P | D[u,v]^r(P) | VD(P)
///   BIP(m,rank) | BH(n,[1,2][3,4]) | BH(n,[2,7],N^2) | GLUE_P8 | GLUE_P8(N=2) | GLUE_P8(N=2,printed)
///   JOIN(P,Q) | (P)
/// A range operator without exponent uses multiplicity N.
ConstructionExpr parse_construction(std::string_view text);
std::string to_string(const ConstructionExpr& e);

nlohmann::json to_json(const ConstructionExpr& e);
ConstructionExpr construction_from_json(const nlohmann::json& j);

bool depends_on_N(const ConstructionExpr& e);

/// Upper bound on the degree in N of every flag-vector entry of the family.
int degree_bound(const ConstructionExpr& e);

struct EvalOptions {
  std::optional<std::int64_t> N;
  OperatorOrder order = OperatorOrder::InnermostFirst;
};

/// InvalidArgument when N is needed but unset, or a multiplicity evaluates below 1.
GradedPoset evaluate(const ConstructionExpr& e, const EvalOptions& options = {});

}  // namespace flagcone
