#include "flagcone/rank8.hpp"

#include "flagcone/constructions.hpp"
#include "flagcone/construction_expr.hpp"
#include "flagcone/eulerian.hpp"
#include "flagcone/interpolation.hpp"

#include <random>

namespace flagcone {

namespace {

constexpr int kRows = 20;
constexpr int kCols = 21;

// Rows of the certificate matrix, columns as in rank8_columns().
constexpr int kMatrix[kRows][kCols] = {
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, -1, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, -1, 0, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, -1, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, -1, 0, -1, 1, 0, 0, 0, -1, 1, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0},
    {1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0},
    {1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0},
    {3, 0, -1, -1, 0, -1, 0, 1, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0},
    {3, 0, -2, 0, 0, -1, 0, 1, -1, 0, 1, -1, 0, -1, 0, 0, 0, 0, 1, 0, 0},
    {3, 0, -1, -1, 0, -1, 0, 1, 0, 0, 0, -1, 0, -2, 0, 0, 1, 0, 1, 0, 0},
    {1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1, 0},
    {1, 0, -1, 0, 0, -1, 0, 1, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0, 1, 0, -1},
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1},
    {4, -2, -1, 0, -1, -2, 1, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 1, 1, 0, -1},
};

}  // namespace

const std::vector<RankSubset>& rank8_columns() {
  static const std::vector<RankSubset> columns = [] {
    std::vector<RankSubset> out;
    for (const char* s : {"", "12", "23", "34", "1234", "45", "1245", "2345", "56", "1256", "2356", "3456",
                          "123456", "67", "1267", "2367", "3467", "123467", "4567", "124567", "234567"}) {
      std::vector<int> members;
      for (const char* c = s; *c; ++c) members.push_back(*c - '0');
      out.push_back(RankSubset::of(members));
    }
    return out;
  }();
  return columns;
}

const RationalMatrix& rank8_matrix() {
  static const RationalMatrix M = [] {
    RationalMatrix m;
    m.columns = rank8_columns();
    for (const auto& row : kMatrix) m.rows.emplace_back(std::begin(row), std::end(row));
    return m;
  }();
  return M;
}

LVector rank8_row_vector(std::size_t row) {
  const auto& M = rank8_matrix();
  if (row >= M.row_count()) throw Error(Errc::InvalidArgument, "row index out of range");
  LVector L(8, KParam::half());
  for (std::size_t c = 0; c < M.column_count(); ++c) L[M.columns[c]] = M.rows[row][c];
  return L;
}

const std::vector<IntervalSystem>& rank8_table_systems() {
  static const std::vector<IntervalSystem> systems = [] {
    std::vector<IntervalSystem> out;
    for (const char* s : {"", "[1,2]", "[2,3]", "[3,4]", "[1,2][3,4]", "[2,3][4,5]", "[1,2][5,6]",
                          "[1,2][3,4][5,6]", "[3,6]", "[6,7]", "[1,2][6,7]", "[1,4][6,7]", "[4,5][6,7]",
                          "[2,3][4,5][6,7]", "[1,2][4,7]", "[2,7]"})
      out.push_back(IntervalSystem::parse(7, s));
    return out;
  }();
  return systems;
}

LinearFunctional rank8_f_form() {
  return LinearFunctional::parse("f1356 - f135 - f356 + f15 - f16 + f35 + f36 - f3", 8, KParam::half());
}

LinearFunctional rank8_l_form() {
  return LinearFunctional::parse("L45 + L2345 + L56 + L1256 - L2367 - L3467 + L4567 + L124567", 8, KParam::half());
}

std::vector<GradedPoset> half_eulerian_rank8_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RandomPosetOptions small{3, 0.35};
  auto random_of_rank = [&](int rank) { return random_graded_poset(rank, rng, small); };

  // Range operators over intervals of even length keep a chain half-Eulerian.
  auto even_ops_chain = [&](int rank) {
    std::uniform_int_distribution<int> nops(1, 3), mult(1, 3);
    std::vector<RangeOp> ops;
    const int n = rank - 1;
    int k = nops(rng);
    for (int t = 0; t < k && n >= 2; ++t) {
      std::uniform_int_distribution<int> lo(1, n - 1);
      int u = lo(rng);
      std::uniform_int_distribution<int> half_len(1, (n - u + 1) / 2);
      int v = u + 2 * half_len(rng) - 1;
      ops.push_back({mult(rng), u, v});
    }
    return apply_range_ops(chain(rank), ops);
  };

  std::vector<GradedPoset> out;
  out.push_back(glued_P(1));
  out.push_back(glued_P(2));
  std::uniform_int_distribution<int> pick(0, 3), split(1, 4);
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 100 * count + 100) throw Error(Errc::InvalidArgument, "corpus generation stalled");
    GradedPoset P;
    switch (pick(rng)) {
      case 0: {  // two vertical doublings joined: ranks (2a-1) + (2b-1) = 8
        int a = split(rng);
        P = point_join(vertical_double(random_of_rank(a)), vertical_double(random_of_rank(5 - a)));
        break;
      }
      case 1:
        P = even_ops_chain(8);
        break;
      case 2: {
        int a = split(rng);
        P = point_join(vertical_double(random_of_rank(a)), even_ops_chain(8 - (2 * a - 1)));
        break;
      }
      default: {
        int a = split(rng);
        P = point_join(even_ops_chain(2 * a - 1), vertical_double(random_of_rank(5 - a)));
        break;
      }
    }
    if (P.rank() == 8 && is_half_eulerian_parity(P).holds) out.push_back(std::move(P));
  }
  return out;
}

bool Rank8Report::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

nlohmann::json Rank8Report::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks)
    cs.push_back({{"id", c.id}, {"description", c.description}, {"passed", c.passed}, {"detail", c.detail}});
  nlohmann::json ms = nlohmann::json::array();
  for (const auto& m : matches)
    ms.push_back({{"source", m.source}, {"construction", m.construction}, {"norm_exponent", m.norm_exponent},
                  {"row", m.row}});
  return {{"passed", passed()},
          {"checks", cs},
          {"matches", ms},
          {"fixture_only_rows", fixture_only_rows},
          {"matrix_rank", matrix_rank},
          {"corpus_size", corpus_size},
          {"corpus_minimum", to_exact_string(corpus_minimum)}};
}

Rank8Report rank8_certificate(const Rank8Options& options) {
  Rank8Report report;
  const auto& M = rank8_matrix();
  std::vector<LVector> rows;
  for (std::size_t r = 0; r < M.row_count(); ++r) rows.push_back(rank8_row_vector(r));

  // (a) limit vectors of the sixteen table posets and of P(N)
  std::vector<std::pair<RowMatch, RationalVector>> limits;
  std::string failure;
  try {
    const auto& systems = rank8_table_systems();
    for (std::size_t i = 0; i < systems.size(); ++i) {
      ConstructionExpr e;
      e.kind = ConstructionExpr::Kind::BhPoset;
      e.a = 7;
      e.intervals = systems[i];
      e.multiplicity = IntPoly::variable();
      LimitOptions lo;
      lo.norm_exponent = static_cast<int>(systems[i].size());
      auto res = limit_l_vector(e, lo);
      limits.push_back({RowMatch{"P" + std::to_string(i + 1), to_string(e), lo.norm_exponent, 0}, res.limit});
    }
    auto glue = parse_construction("GLUE_P8");
    LimitOptions lo;
    lo.norm_exponent = 4;
    auto res = limit_l_vector(glue, lo);
    limits.push_back({RowMatch{"P(N)", to_string(glue), 4, 0}, res.limit});
  } catch (const Error& e) {
    failure = e.what();
  }
  report.checks.push_back({"a", "limit L-vectors of the 16 table posets and P(N) computed exactly", failure.empty(),
                           failure.empty() ? std::to_string(limits.size()) + " limit vectors" : failure});

  // (b) multiset containment in the fixture rows
  std::vector<bool> used(M.row_count(), false);
  std::size_t matched = 0;
  for (auto& [match, vec] : limits) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r] || static_cast<const RationalVector&>(rows[r]) != vec) continue;
      used[r] = true;
      match.row = static_cast<int>(r) + 1;
      ++matched;
      break;
    }
    report.matches.push_back(match);
  }
  for (std::size_t r = 0; r < used.size(); ++r)
    if (!used[r]) report.fixture_only_rows.push_back(static_cast<int>(r) + 1);
  report.checks.push_back({"b", "every constructed limit vector equals a distinct fixture row",
                           failure.empty() && matched == limits.size() && limits.size() == 17,
                           std::to_string(matched) + "/" + std::to_string(limits.size()) + " matched"});

  // (c) equality on all twenty rows, in both bases
  const auto f_form = rank8_f_form();
  const auto l_form = rank8_l_form();
  std::size_t zero_rows = 0;
  for (const auto& L : rows)
    if (evaluate_on_l(f_form, L) == 0 && evaluate_on_l(l_form, L) == 0) ++zero_rows;
  // L vanishes off even sets on half-Eulerian posets, so only those coefficients are compared.
  auto converted = change_basis(f_form);
  LinearFunctional even_part(8, Basis::L, KParam::half());
  for (const auto& [S, c] : converted.coefficients())
    if (is_even_set(S)) even_part.set(S, c);
  LinearFunctional negated_l(8, Basis::L, KParam::half());
  for (const auto& [S, c] : l_form.coefficients()) negated_l.set(S, -c);
  const bool basis_ok = even_part == negated_l && change_basis(converted) == f_form;
  report.checks.push_back({"c", "f-form equals minus the L-form on even sets and vanishes on every row",
                           basis_ok && zero_rows == rows.size(),
                           std::to_string(zero_rows) + "/" + std::to_string(rows.size()) +
                               " rows give 0; basis change " + (basis_ok ? "exact" : "MISMATCH")});

  // (d) independence
  report.matrix_rank = matrix_rank(M);
  report.checks.push_back({"d", "fixture matrix has full row rank", report.matrix_rank == kRows,
                           "rank " + std::to_string(report.matrix_rank)});

  // (e) nonnegativity on half-Eulerian posets
  auto corpus = half_eulerian_rank8_corpus(options.corpus_size, options.seed);
  report.corpus_size = corpus.size();
  bool nonneg = true;
  std::string worst;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    auto F = flag_f_vector(corpus[i]);
    auto value = evaluate(f_form, F);
    if (i == 0 || value < report.corpus_minimum) report.corpus_minimum = value;
    if (value < 0 && nonneg) {
      nonneg = false;
      worst = "poset #" + std::to_string(i) + " gives " + to_exact_string(value);
    }
  }
  report.checks.push_back({"e", "f-form is nonnegative on the half-Eulerian corpus",
                           nonneg && corpus.size() >= options.corpus_size,
                           nonneg ? std::to_string(corpus.size()) + " posets, minimum " +
                                        to_exact_string(report.corpus_minimum)
                                  : worst});

  // (f) no convolution split: every rank is used by the L-form
  RankSubset used_ranks;
  for (const auto& [S, c] : l_form.coefficients()) used_ranks = used_ranks | S;
  report.checks.push_back({"f", "every element of [1,7] occurs in the L-form support",
                           used_ranks == RankSubset::full(7), "support union " + used_ranks.to_braced()});

  // P(N) itself must be half-Eulerian
  bool glued_ok = is_half_eulerian_parity(glued_P(1)).holds && is_half_eulerian_parity(glued_P(2)).holds;
  report.checks.push_back({"glue", "P(1) and P(2) pass the half-Eulerian parity test", glued_ok,
                           glued_ok ? "ok" : "parity failure"});
  return report;
}

}  // namespace flagcone
