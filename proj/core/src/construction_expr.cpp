#include "flagcone/construction_expr.hpp"

#include <algorithm>
#include <cctype>

namespace flagcone {

namespace {

using Kind = ConstructionExpr::Kind;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ConstructionExpr parse_all() {
    auto e = parse_expr();
    skip();
    if (i_ != text_.size()) throw fail("trailing input");
    return e;
  }

 private:
  Error fail(const std::string& why) const {
    return Error(Errc::ParseError, "construction '" + std::string(text_) + "' at offset " + std::to_string(i_) + ": " +
                                       why);
  }
  void skip() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < text_.size() && text_[i_] == c;
  }
  bool accept(std::string_view word) {
    skip();
    if (text_.substr(i_, word.size()) == word) {
      i_ += word.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!peek(c)) throw fail(std::string("expected '") + c + "'");
    ++i_;
  }
  int integer() {
    skip();
    std::size_t start = i_;
    while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
    if (i_ == start) throw fail("expected an integer");
    return std::stoi(std::string(text_.substr(start, i_ - start)));
  }
  // ^2 | ^N | ^{N+1}
  IntPoly exponent() {
    expect('^');
    skip();
    if (peek('{')) {
      auto close = text_.find('}', i_);
      if (close == std::string_view::npos) throw fail("unclosed brace");
      auto p = IntPoly::parse(text_.substr(i_ + 1, close - i_ - 1));
      i_ = close + 1;
      return p;
    }
    std::size_t start = i_;
    while (i_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[i_])) || text_[i_] == 'N')) ++i_;
    if (i_ == start) throw fail("expected a multiplicity");
    return IntPoly::parse(text_.substr(start, i_ - start));
  }
  std::string until_delim() {
    skip();
    std::size_t start = i_;
    int depth = 0;
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (c == '(' || c == '{' || c == '[') ++depth;
      if (c == ')' || c == '}' || c == ']') {
        if (depth == 0) break;
        --depth;
      }
      if (c == ',' && depth == 0) break;
      ++i_;
    }
    return std::string(text_.substr(start, i_ - start));
  }

  ConstructionExpr operand() {
    if (peek('(')) {
      ++i_;
      auto e = parse_expr();
      expect(')');
      return e;
    }
    return parse_expr();
  }

  ConstructionExpr parse_expr() {
    skip();
    if (i_ >= text_.size()) throw fail("unexpected end");
    ConstructionExpr e;
    if (peek('(')) {
      ++i_;
      e = parse_expr();
      expect(')');
      return e;
    }
    if (accept("GLUE_P8")) {
      e.kind = Kind::GlueP8;
      e.multiplicity = IntPoly::variable();
      if (peek('(')) {
        ++i_;
        while (!peek(')')) {
          if (accept("N=")) {
            e.multiplicity = IntPoly::parse(until_delim());
          } else if (accept("printed")) {
            e.variant = GlueVariant::AsPrinted;
          } else if (accept("corrected")) {
            e.variant = GlueVariant::Corrected;
          } else {
            throw fail("unknown GLUE_P8 option");
          }
          if (peek(',')) ++i_;
        }
        expect(')');
      }
      return e;
    }
    if (accept("JOIN")) {
      e.kind = Kind::Join;
      expect('(');
      e.args.push_back(parse_expr());
      expect(',');
      e.args.push_back(parse_expr());
      expect(')');
      return e;
    }
    if (accept("VD")) {
      e.kind = Kind::VerticalDouble;
      expect('(');
      e.args.push_back(parse_expr());
      expect(')');
      return e;
    }
    if (accept("BIP")) {
      e.kind = Kind::Bipartite;
      expect('(');
      e.a = integer();
      expect(',');
      e.b = integer();
      expect(')');
      return e;
    }
    if (accept("BH")) {
      e.kind = Kind::BhPoset;
      expect('(');
      e.a = integer();
      expect(',');
      e.intervals = IntervalSystem::parse(e.a, until_delim());
      e.multiplicity = IntPoly::variable();
      if (peek(',')) {
        ++i_;
        e.multiplicity = IntPoly::parse(until_delim());
      }
      expect(')');
      return e;
    }
    if (accept("C")) {
      e.kind = Kind::Chain;
      if (peek('(')) {
        ++i_;
        e.a = integer();
        expect(')');
      } else {
        e.a = integer();
      }
      return e;
    }
    if (accept("B")) {
      e.kind = Kind::Boolean;
      if (peek('(')) {
        ++i_;
        e.a = integer();
        expect(')');
      } else {
        e.a = integer();
      }
      return e;
    }
    if (accept("D")) {
      if (peek('[')) {
        ++i_;
        e.kind = Kind::ThickenRange;
        e.a = integer();
        expect(',');
        e.b = integer();
        expect(']');
        e.multiplicity = peek('^') ? exponent() : IntPoly::variable();
      } else {
        e.kind = Kind::Thicken;
        if (peek('^'))
          e.multiplicity = exponent();
        else
          e.multiplicity = IntPoly::constant(integer());
      }
      e.args.push_back(operand());
      return e;
    }
    throw fail("unknown construction");
  }

  std::string_view text_;
  std::size_t i_ = 0;
};

std::string multiplicity_suffix(const IntPoly& p) {
  if (p.is_constant()) return "^" + p.to_string();
  return "^{" + p.to_string() + "}";
}

}  // namespace

ConstructionExpr parse_construction(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const ConstructionExpr& e) {
  switch (e.kind) {
    case Kind::Chain: return "C" + std::to_string(e.a);
    case Kind::Boolean: return "B" + std::to_string(e.a);
    case Kind::Thicken: {
      std::string head = e.multiplicity.is_constant() ? "D" + e.multiplicity.to_string()
                                                      : "D^{" + e.multiplicity.to_string() + "}";
      return head + "(" + to_string(e.args.at(0)) + ")";
    }
    case Kind::ThickenRange: {
      std::string head = "D[" + std::to_string(e.a) + "," + std::to_string(e.b) + "]" + multiplicity_suffix(e.multiplicity);
      const auto& inner = e.args.at(0);
      if (inner.kind == Kind::ThickenRange) return head + " " + to_string(inner);
      return head + " (" + to_string(inner) + ")";
    }
    case Kind::VerticalDouble: return "VD(" + to_string(e.args.at(0)) + ")";
    case Kind::Bipartite: return "BIP(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
    case Kind::BhPoset: {
      std::string out = "BH(" + std::to_string(e.a) + "," + e.intervals.to_string();
      if (e.multiplicity != IntPoly::variable()) out += "," + e.multiplicity.to_string();
      return out + ")";
    }
    case Kind::GlueP8: {
      std::vector<std::string> opts;
      if (e.multiplicity != IntPoly::variable()) opts.push_back("N=" + e.multiplicity.to_string());
      if (e.variant == GlueVariant::AsPrinted) opts.push_back("printed");
      if (opts.empty()) return "GLUE_P8";
      std::string out = "GLUE_P8(";
      for (std::size_t i = 0; i < opts.size(); ++i) out += (i ? "," : "") + opts[i];
      return out + ")";
    }
    case Kind::Join: return "JOIN(" + to_string(e.args.at(0)) + "," + to_string(e.args.at(1)) + ")";
  }
  return "?";
}

nlohmann::json to_json(const ConstructionExpr& e) {
  switch (e.kind) {
    case Kind::Chain: return {{"op", "chain"}, {"rank", e.a}};
    case Kind::Boolean: return {{"op", "boolean"}, {"n", e.a}};
    case Kind::Thicken: return {{"op", "thicken"}, {"r", e.multiplicity.to_string()}, {"of", to_json(e.args.at(0))}};
    case Kind::ThickenRange:
      return {{"op", "thicken_range"},
              {"r", e.multiplicity.to_string()},
              {"u", e.a},
              {"v", e.b},
              {"of", to_json(e.args.at(0))}};
    case Kind::VerticalDouble: return {{"op", "vertical_double"}, {"of", to_json(e.args.at(0))}};
    case Kind::Bipartite: return {{"op", "bipartite"}, {"m", e.a}, {"rank", e.b}};
    case Kind::BhPoset:
      return {{"op", "bh"}, {"n", e.a}, {"intervals", e.intervals.to_string()}, {"r", e.multiplicity.to_string()}};
    case Kind::GlueP8:
      return {{"op", "glue_p8"},
              {"N", e.multiplicity.to_string()},
              {"variant", e.variant == GlueVariant::Corrected ? "corrected" : "printed"}};
    case Kind::Join: return {{"op", "join"}, {"lower", to_json(e.args.at(0))}, {"upper", to_json(e.args.at(1))}};
  }
  return nullptr;
}

ConstructionExpr construction_from_json(const nlohmann::json& j) {
  try {
    ConstructionExpr e;
    const auto op = j.at("op").get<std::string>();
    if (op == "chain") {
      e.kind = Kind::Chain;
      e.a = j.at("rank").get<int>();
    } else if (op == "boolean") {
      e.kind = Kind::Boolean;
      e.a = j.at("n").get<int>();
    } else if (op == "thicken") {
      e.kind = Kind::Thicken;
      e.multiplicity = IntPoly::parse(j.at("r").get<std::string>());
      e.args.push_back(construction_from_json(j.at("of")));
    } else if (op == "thicken_range") {
      e.kind = Kind::ThickenRange;
      e.multiplicity = IntPoly::parse(j.at("r").get<std::string>());
      e.a = j.at("u").get<int>();
      e.b = j.at("v").get<int>();
      e.args.push_back(construction_from_json(j.at("of")));
    } else if (op == "vertical_double") {
      e.kind = Kind::VerticalDouble;
      e.args.push_back(construction_from_json(j.at("of")));
    } else if (op == "bipartite") {
      e.kind = Kind::Bipartite;
      e.a = j.at("m").get<int>();
      e.b = j.at("rank").get<int>();
    } else if (op == "bh") {
      e.kind = Kind::BhPoset;
      e.a = j.at("n").get<int>();
      e.intervals = IntervalSystem::parse(e.a, j.at("intervals").get<std::string>());
      e.multiplicity = IntPoly::parse(j.value("r", std::string("N")));
    } else if (op == "glue_p8") {
      e.kind = Kind::GlueP8;
      e.multiplicity = IntPoly::parse(j.value("N", std::string("N")));
      auto variant = j.value("variant", std::string("corrected"));
      if (variant != "corrected" && variant != "printed") throw Error(Errc::ParseError, "unknown glue variant");
      e.variant = variant == "printed" ? GlueVariant::AsPrinted : GlueVariant::Corrected;
    } else if (op == "join") {
      e.kind = Kind::Join;
      e.args.push_back(construction_from_json(j.at("lower")));
      e.args.push_back(construction_from_json(j.at("upper")));
    } else {
      throw Error(Errc::ParseError, "unknown construction op '" + op + "'");
    }
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::ParseError, std::string("construction JSON: ") + ex.what());
  }
}

bool depends_on_N(const ConstructionExpr& e) {
  bool uses = (e.kind == Kind::Thicken || e.kind == Kind::ThickenRange || e.kind == Kind::BhPoset ||
               e.kind == Kind::GlueP8) &&
              !e.multiplicity.is_constant();
  for (const auto& a : e.args) uses = uses || depends_on_N(a);
  return uses;
}

namespace {

int rank_of_expr(const ConstructionExpr& e) {
  switch (e.kind) {
    case Kind::Chain: return e.a;
    case Kind::Boolean: return e.a;
    case Kind::Thicken:
    case Kind::ThickenRange: return rank_of_expr(e.args.at(0));
    case Kind::VerticalDouble: return 2 * rank_of_expr(e.args.at(0)) - 1;
    case Kind::Bipartite: return e.b;
    case Kind::BhPoset: return e.a + 1;
    case Kind::GlueP8: return 8;
    case Kind::Join: return rank_of_expr(e.args.at(0)) + rank_of_expr(e.args.at(1));
  }
  return 1;
}

int poly_degree(const IntPoly& p) { return std::max(p.degree(), 0); }

}  // namespace

int degree_bound(const ConstructionExpr& e) {
  switch (e.kind) {
    case Kind::Chain:
    case Kind::Boolean:
    case Kind::Bipartite: return 0;
    // every chain entry picks up at most one factor r per interior rank
    case Kind::Thicken: return (rank_of_expr(e) - 1) * poly_degree(e.multiplicity) + degree_bound(e.args.at(0));
    // copies within the range are matched, so a chain picks up at most one factor r
    case Kind::ThickenRange: return poly_degree(e.multiplicity) + degree_bound(e.args.at(0));
    case Kind::VerticalDouble: return degree_bound(e.args.at(0));
    case Kind::BhPoset: return static_cast<int>(e.intervals.size()) * poly_degree(e.multiplicity);
    case Kind::GlueP8: {
      int best = 0;
      for (const auto& part : glue_part_factors(e.variant)) {
        int sum = 0;
        for (const auto& f : part) sum += poly_degree(f.r);
        best = std::max(best, sum);
      }
      return best * poly_degree(e.multiplicity);
    }
    case Kind::Join: return degree_bound(e.args.at(0)) + degree_bound(e.args.at(1));
  }
  return 0;
}

namespace {

std::int64_t eval_multiplicity(const IntPoly& p, const EvalOptions& options) {
  Integer v;
  if (p.is_constant()) {
    v = p.coefficients().empty() ? Integer(0) : p.coefficients()[0];
  } else {
    if (!options.N) throw Error(Errc::InvalidArgument, "construction depends on N but no N was given");
    v = p.eval(Integer(*options.N));
  }
  if (v < 1) throw Error(Errc::InvalidArgument, "multiplicity " + p.to_string() + " evaluates to " + v.str());
  if (v > Integer(kMaxConstructedElements)) throw Error(Errc::SizeLimit, "multiplicity " + v.str() + " too large");
  return v.convert_to<std::int64_t>();
}

}  // namespace

GradedPoset evaluate(const ConstructionExpr& e, const EvalOptions& options) {
  switch (e.kind) {
    case Kind::Chain: return chain(e.a);
    case Kind::Boolean: return boolean_lattice(e.a);
    case Kind::Thicken:
      return thicken(evaluate(e.args.at(0), options), static_cast<int>(eval_multiplicity(e.multiplicity, options)));
    case Kind::ThickenRange: {
      std::vector<RangeOp> ops;
      const ConstructionExpr* cur = &e;
      while (cur->kind == Kind::ThickenRange) {
        ops.push_back({eval_multiplicity(cur->multiplicity, options), cur->a, cur->b});
        cur = &cur->args.at(0);
      }
      return apply_range_ops(evaluate(*cur, options), ops, options.order);
    }
    case Kind::VerticalDouble: return vertical_double(evaluate(e.args.at(0), options));
    case Kind::Bipartite: return bipartite_example(e.a, e.b);
    case Kind::BhPoset:
      return bh_poset(e.a, e.intervals, static_cast<int>(eval_multiplicity(e.multiplicity, options)), options.order);
    case Kind::GlueP8:
      return glued_P(static_cast<int>(eval_multiplicity(e.multiplicity, options)), GlueOptions{e.variant, options.order});
    case Kind::Join: return point_join(evaluate(e.args.at(0), options), evaluate(e.args.at(1), options));
  }
  throw Error(Errc::InvalidArgument, "unknown construction");
}

}  // namespace flagcone
