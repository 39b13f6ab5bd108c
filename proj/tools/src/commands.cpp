#include "commands.hpp"

#include "worker_pool.hpp"

#include "flagcone/construction_expr.hpp"
#include "flagcone/eulerian.hpp"
#include "flagcone/flag_algebra.hpp"
#include "flagcone/functional.hpp"
#include "flagcone/interpolation.hpp"
#include "flagcone/poset_io.hpp"
#include "flagcone/rank8.hpp"
#include "flagcone/validation.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#ifndef FLAGCONE_VERSION
#define FLAGCONE_VERSION "unknown"
#endif

namespace flagcone::tool {

namespace {

using nlohmann::json;

struct Input {
  GradedPoset poset;
  std::string source;
  std::string kind;  // "file" or "construction"
  std::string digest;
};

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json parse_json(const std::string& bytes, const std::string& what) {
  try {
    return json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, what + ": " + e.what());
  }
}

bool is_file(const std::string& path) {
  std::error_code ec;
  return std::filesystem::is_regular_file(path, ec);
}

Input load_input(const RunConfig& cfg) {
  if (cfg.input.empty()) throw Error(Errc::InvalidArgument, "no input given");
  if (is_file(cfg.input)) {
    auto bytes = read_bytes(cfg.input);
    return {poset_from_json(parse_json(bytes, cfg.input)), cfg.input, "file", digest_hex(bytes)};
  }
  if (cfg.input.ends_with(".json")) throw Error(Errc::InvalidArgument, "no such poset file: " + cfg.input);
  auto e = parse_construction(cfg.input);
  return {evaluate(e, {cfg.N, cfg.order}), to_string(e), "construction", digest_hex(cfg.input)};
}

json header(const RunConfig& cfg) {
  return {{"tool", "flagcone"}, {"version", FLAGCONE_VERSION}, {"command", cfg.command}, {"seed", cfg.seed}};
}

json header(const RunConfig& cfg, const Input& in) {
  auto h = header(cfg);
  h["input"] = {{"source", in.source}, {"kind", in.kind}, {"digest", in.digest}};
  if (cfg.N) h["N"] = *cfg.N;
  return h;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + cfg.output);
  out << text;
}

void emit(const RunConfig& cfg, const json& j) { emit(cfg, j.dump(2) + "\n"); }

void require_not_csv(const RunConfig& cfg) {
  if (cfg.format == Format::Csv) throw Error(Errc::InvalidArgument, cfg.command + " has no csv output");
}

std::string eulerian_label(KParam k) {
  if (k == KParam::one()) return "1-Eulerian";
  if (k == KParam::half()) return "half-Eulerian";
  return k.to_string() + "-Eulerian";
}

std::string witness_text(const IntervalWitness& w) {
  return "[" + std::to_string(w.x) + ", " + std::to_string(w.y) + "] rank " + std::to_string(w.rank) + ": " +
         w.quantity + " = " + to_exact_string(w.value) + ", expected " + to_exact_string(w.expected);
}

int max_thickness(const GradedPoset& P) {
  int r = 1;
  while (static_cast<std::size_t>(r) < P.size() && is_r_thick(P, r + 1)) ++r;
  return r;
}

template <class V>
std::string vector_text(const SubsetVector<V>& v, const std::string& letter) {
  std::string out;
  for (std::size_t s = 0; s < v.size(); ++s)
    out += letter + RankSubset::from_bits(static_cast<std::uint32_t>(s)).to_braced() + " = " +
           to_exact_string(v.at_index(s)) + "\n";
  return out;
}

constexpr EulerMethod kMethods[] = {EulerMethod::Definition, EulerMethod::LocalL, EulerMethod::Mu2k};

struct EulerSummary {
  std::vector<std::pair<EulerMethod, Verdict>> verdicts;
  bool agree = true;
  bool holds = true;

  std::string text(KParam k) const {
    std::size_t yes = 0;
    for (const auto& [m, v] : verdicts) yes += v.holds;
    const auto total = std::to_string(verdicts.size());
    if (!agree) {
      std::string out = eulerian_label(k) + ": methods disagree (";
      for (std::size_t i = 0; i < verdicts.size(); ++i)
        out += std::string(i ? ", " : "") + to_string(verdicts[i].first) + " " + (verdicts[i].second.holds ? "yes" : "no");
      return out + ")";
    }
    if (holds) return eulerian_label(k) + ": yes (" + total + "/" + total + " methods)";
    std::string out = eulerian_label(k) + ": no (" + total + "/" + total + " methods)";
    for (const auto& [m, v] : verdicts)
      if (v.witness) return out + "; witness " + witness_text(*v.witness);
    return out;
  }

  json to_json() const {
    json methods = json::object();
    for (const auto& [m, v] : verdicts) methods[to_string(m)] = flagcone::to_json(v);
    return {{"holds", holds}, {"methods_agree", agree}, {"methods", methods}};
  }
};

EulerMethod parse_method(const std::string& name) {
  if (name == "definition") return EulerMethod::Definition;
  if (name == "local-l") return EulerMethod::LocalL;
  if (name == "mu-2k") return EulerMethod::Mu2k;
  throw Error(Errc::InvalidArgument, "unknown method " + name);
}

EulerSummary euler_summary(const GradedPoset& P, KParam k, const std::string& method) {
  EulerSummary s;
  if (method == "all") {
    for (auto m : kMethods) s.verdicts.emplace_back(m, is_k_eulerian(P, k, m));
  } else {
    const auto m = parse_method(method);
    s.verdicts.emplace_back(m, is_k_eulerian(P, k, m));
  }
  s.holds = s.verdicts.front().second.holds;
  for (const auto& [m, v] : s.verdicts) s.agree = s.agree && v.holds == s.holds;
  return s;
}

std::string first_ds_residual(const DSReport& r) {
  for (const auto& d : r.residuals)
    if (d.residual != 0)
      return "S = " + d.S.to_braced() + ", gap [" + std::to_string(d.i) + "," + std::to_string(d.l) +
             "]: residual " + to_exact_string(d.residual);
  return "";
}

std::size_t nonzero_residuals(const DSReport& r) {
  std::size_t c = 0;
  for (const auto& d : r.residuals) c += d.residual != 0;
  return c;
}

LinearFunctional load_functional(const RunConfig& cfg) {
  const KParam k = KParam::parse(cfg.k);
  std::string text = cfg.input;
  if (is_file(cfg.input)) {
    text = read_bytes(cfg.input);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
      return LinearFunctional::from_json(parse_json(text, cfg.input));
  }
  if (!cfg.n) throw Error(Errc::InvalidArgument, "a functional given as text needs --n");
  return LinearFunctional::parse(text, *cfg.n + 1, k);
}

std::optional<std::size_t> matching_rank8_row(const RationalVector& limit) {
  if (limit.rank() != 8) return std::nullopt;
  const auto& M = rank8_matrix();
  std::vector<bool> on_column(limit.size(), false);
  for (const auto& c : M.columns) on_column[c.bits()] = true;
  for (std::size_t s = 0; s < limit.size(); ++s)
    if (!on_column[s] && limit.at_index(s) != 0) return std::nullopt;
  for (std::size_t row = 0; row < M.row_count(); ++row) {
    bool same = true;
    for (std::size_t c = 0; c < M.column_count() && same; ++c) same = M.rows[row][c] == limit[M.columns[c]];
    if (same) return row + 1;
  }
  return std::nullopt;
}

std::mt19937_64 stream(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

// Two thin rank-4 blocks under a common top. Inside a block every rank-2
// element is an edge between an atom and a coatom, so all rank-2 intervals
// are 3-chains and the block is fixed by a bipartite graph.
std::optional<GradedPoset> random_block_pair(std::mt19937_64& rng) {
  std::vector<std::pair<std::int64_t, int>> ranks{{0, 0}};
  std::vector<std::pair<std::int64_t, std::int64_t>> covers;
  std::int64_t next = 1;
  std::vector<std::int64_t> block_tops;
  std::bernoulli_distribution edge(0.5);
  for (int b = 0; b < 2; ++b) {
    const int atoms = 1 + static_cast<int>(rng() % 3);
    const int coatoms = 1 + static_cast<int>(rng() % 3);
    std::vector<std::int64_t> a_ids, c_ids;
    for (int i = 0; i < atoms; ++i) {
      a_ids.push_back(next);
      ranks.emplace_back(next, 1);
      covers.emplace_back(0, next++);
    }
    for (int j = 0; j < coatoms; ++j) {
      c_ids.push_back(next);
      ranks.emplace_back(next++, 3);
    }
    std::vector<int> a_deg(static_cast<std::size_t>(atoms)), c_deg(static_cast<std::size_t>(coatoms));
    for (int i = 0; i < atoms; ++i)
      for (int j = 0; j < coatoms; ++j) {
        if (!edge(rng)) continue;
        ranks.emplace_back(next, 2);
        covers.emplace_back(a_ids[static_cast<std::size_t>(i)], next);
        covers.emplace_back(next++, c_ids[static_cast<std::size_t>(j)]);
        ++a_deg[static_cast<std::size_t>(i)];
        ++c_deg[static_cast<std::size_t>(j)];
      }
    for (int d : a_deg)
      if (d == 0) return std::nullopt;
    for (int d : c_deg)
      if (d == 0) return std::nullopt;
    const std::int64_t top = next++;
    ranks.emplace_back(top, 4);
    for (auto c : c_ids) covers.emplace_back(c, top);
    block_tops.push_back(top);
  }
  const std::int64_t top = next;
  ranks.emplace_back(top, 5);
  for (auto t : block_tops) covers.emplace_back(t, top);
  return build_poset(5, ranks, covers);
}

bool is_ds_witness(const GradedPoset& P) {
  const auto report = ds_residuals(flag_f_vector(P), KParam::half());
  return report.all_zero_f && !is_half_eulerian_parity(P).holds;
}

int fuzz_identities(const RunConfig& cfg) {
  if (cfg.min_rank < 1 || cfg.max_rank < cfg.min_rank) throw Error(Errc::InvalidArgument, "bad rank range");
  std::vector<std::string> failures(cfg.count);
  std::vector<std::string> digests(cfg.count);
  parallel_for(cfg.count, cfg.jobs, [&](std::size_t i) {
    auto rng = stream(cfg.seed, i);
    const int span = cfg.max_rank - cfg.min_rank + 1;
    const int rank = cfg.min_rank + static_cast<int>(rng() % static_cast<std::uint64_t>(span));
    const auto P = random_graded_poset(rank, rng);
    digests[i] = digest_hex(poset_to_json(P).dump());
    const auto F = flag_f_vector(P);
    for (int two_k = 1; two_k <= 4; ++two_k) {
      const KParam k(two_k);
      const std::string at = " at k = " + k.to_string();
      if (moebius_k(P, k).full() != moebius_k_hall(F, k)) {
        failures[i] = "Hall formula" + at;
        return;
      }
      if (f_from_l(l_vector(F, k)) != F) {
        failures[i] = "L-vector round trip" + at;
        return;
      }
      auto s = euler_summary(P, k, "all");
      if (!s.agree) {
        failures[i] = "Eulerian methods disagree" + at;
        return;
      }
    }
  });

  json failed = json::array();
  for (std::size_t i = 0; i < cfg.count; ++i)
    if (!failures[i].empty()) failed.push_back({{"index", i}, {"poset_digest", digests[i]}, {"failure", failures[i]}});
  if (cfg.format == Format::Json) {
    auto j = header(cfg);
    j["mode"] = "identities";
    j["posets"] = cfg.count;
    j["ranks"] = {cfg.min_rank, cfg.max_rank};
    j["failures"] = failed;
    emit(cfg, j);
  } else {
    std::ostringstream out;
    out << "identities: " << cfg.count << " posets, ranks " << cfg.min_rank << "-" << cfg.max_rank << ", seed "
        << cfg.seed << ", " << failed.size() << " failures\n";
    for (const auto& f : failed)
      out << "  #" << f["index"].get<std::size_t>() << " (" << f["poset_digest"].get<std::string>()
          << "): " << f["failure"].get<std::string>() << "\n";
    emit(cfg, out.str());
  }
  return failed.empty() ? kPass : kViolated;
}

int fuzz_ds_witness(const RunConfig& cfg) {
  std::vector<std::optional<GradedPoset>> found(cfg.count);
  parallel_for(cfg.count, cfg.jobs, [&](std::size_t i) {
    auto rng = stream(cfg.seed, i);
    auto P = random_block_pair(rng);
    if (P && is_ds_witness(*P)) found[i] = std::move(P);
  });
  std::size_t hits = 0;
  std::optional<std::size_t> first;
  for (std::size_t i = 0; i < cfg.count; ++i)
    if (found[i]) {
      ++hits;
      if (!first) first = i;
    }

  auto j = header(cfg);
  j["mode"] = "ds-witness";
  j["attempts"] = cfg.count;
  j["hits"] = hits;
  if (first) {
    const auto& P = *found[*first];
    j["attempt"] = *first;
    j["poset"] = poset_to_json(P);
    j["poset_digest"] = digest_hex(j["poset"].dump());
  }
  if (cfg.format == Format::Json) {
    std::cout << j.dump(2) << "\n";
  } else if (first) {
    const auto& P = *found[*first];
    std::cout << "ds-witness: found at attempt " << *first << " of " << cfg.count << " (" << hits
              << " hits): rank " << P.rank() << ", " << P.size()
              << " elements; DS residuals zero, parity test fails\n";
  } else {
    std::cout << "ds-witness: none in " << cfg.count << " attempts, seed " << cfg.seed << "\n";
  }
  if (first && !cfg.output.empty()) write_poset_file(*found[*first], cfg.output);
  return first ? kPass : kViolated;
}

}  // namespace

int cmd_build(const RunConfig& cfg) {
  const auto in = load_input(cfg);
  const auto& P = in.poset;
  if (!cfg.output.empty()) write_poset_file(P, cfg.output);
  if (cfg.format == Format::Json) {
    auto j = header(cfg, in);
    j["elements"] = P.size();
    j["rank"] = P.rank();
    if (cfg.output.empty()) j["poset"] = poset_to_json(P);
    else j["written"] = cfg.output;
    std::cout << j.dump(2) << "\n";
  } else {
    require_not_csv(cfg);
    std::cout << in.source << ": " << P.size() << " elements, rank " << P.rank();
    if (!cfg.output.empty()) std::cout << ", written to " << cfg.output;
    std::cout << "\n";
  }
  return kPass;
}

int cmd_analyze(const RunConfig& cfg) {
  require_not_csv(cfg);
  const auto in = load_input(cfg);
  const auto& P = in.poset;
  const KParam k = KParam::parse(cfg.k);
  const auto F = flag_f_vector(P);
  const auto L = l_vector(F, k);
  const MoebiusTable mu(P, k);
  const Rational hall = moebius_k_hall(F, k);
  const int thick = max_thickness(P);
  const auto euler = euler_summary(P, k, "all");
  const auto ds = ds_residuals(F, k);
  std::optional<Verdict> parity;
  if (k == KParam::half()) parity = is_half_eulerian_parity(P);
  const bool consistent = euler.agree && mu.full() == hall && (!parity || parity->holds == euler.holds);

  if (cfg.format == Format::Json) {
    auto j = header(cfg, in);
    j["k"] = k.to_string();
    j["elements"] = P.size();
    j["rank"] = P.rank();
    j["flag_f_vector"] = to_json(F);
    j["l_vector"] = to_json(L);
    j["moebius"] = {{"value", to_exact_string(mu.full())}, {"hall", to_exact_string(hall)}};
    j["thickness"] = thick;
    j["eulerian"] = euler.to_json();
    if (parity) j["half_eulerian_parity"] = to_json(*parity);
    j["ds"] = {{"all_zero_f", ds.all_zero_f}, {"all_zero_l", ds.all_zero_l}, {"nonzero_residuals", nonzero_residuals(ds)}};
    j["consistent"] = consistent;
    emit(cfg, j);
  } else {
    std::ostringstream out;
    out << "input: " << in.source << " (" << in.digest << ")\n";
    out << "elements: " << P.size() << ", rank: " << P.rank() << ", k = " << k.to_string() << "\n";
    out << "flag f-vector:\n" << vector_text(F, "  f");
    out << "L-vector:\n" << vector_text(L, "  L");
    out << "mu_k(0, 1) = " << to_exact_string(mu.full()) << " (Hall formula " << to_exact_string(hall) << ")\n";
    out << "thickness: " << thick << "-thick\n";
    out << euler.text(k) << "\n";
    if (parity) out << "parity test: " << (parity->holds ? "yes" : "no") << "\n";
    out << "DS residuals: "
        << (ds.all_zero_f ? std::string("all zero") : std::to_string(nonzero_residuals(ds)) + " nonzero") << "\n";
    if (!consistent) out << "inconsistent: the characterizations disagree\n";
    emit(cfg, out.str());
  }
  return consistent ? kPass : kViolated;
}

int cmd_flag(const RunConfig& cfg) {
  const auto in = load_input(cfg);
  const auto F = flag_f_vector(in.poset);
  if (cfg.format == Format::Csv) {
    emit(cfg, to_csv(F));
  } else if (cfg.format == Format::Json) {
    auto j = header(cfg, in);
    j["flag_f_vector"] = to_json(F);
    emit(cfg, j);
  } else {
    emit(cfg, vector_text(F, "f"));
  }
  return kPass;
}

int cmd_lvector(const RunConfig& cfg) {
  const auto in = load_input(cfg);
  const KParam k = KParam::parse(cfg.k);
  const auto L = l_vector(flag_f_vector(in.poset), k);
  if (cfg.format == Format::Csv) {
    emit(cfg, to_csv(static_cast<const RationalVector&>(L)));
  } else if (cfg.format == Format::Json) {
    auto j = header(cfg, in);
    j["l_vector"] = to_json(L);
    emit(cfg, j);
  } else {
    emit(cfg, vector_text(L, "L"));
  }
  return kPass;
}

int cmd_moebius(const RunConfig& cfg) {
  require_not_csv(cfg);
  const auto in = load_input(cfg);
  const auto& P = in.poset;
  const KParam k = KParam::parse(cfg.k);
  const MoebiusTable mu(P, k);
  const Rational hall = moebius_k_hall(P, k);
  if (cfg.format == Format::Json) {
    auto j = header(cfg, in);
    j["k"] = k.to_string();
    j["value"] = to_exact_string(mu.full());
    j["hall"] = to_exact_string(hall);
    json pairs = json::array();
    for (Element x = 0; x < P.size(); ++x)
      for (Element y = x; y < P.size(); ++y)
        if (P.leq(x, y)) pairs.push_back({P.id(x), P.id(y), to_exact_string(mu(x, y))});
    j["pairs"] = pairs;
    emit(cfg, j);
  } else {
    emit(cfg, "mu_" + k.to_string() + "(0, 1) = " + to_exact_string(mu.full()) + " (Hall formula " +
                  to_exact_string(hall) + ")\n");
  }
  return mu.full() == hall ? kPass : kViolated;
}

int cmd_check(const RunConfig& cfg) {
  require_not_csv(cfg);
  const auto in = load_input(cfg);
  const auto& P = in.poset;
  auto j = header(cfg, in);
  j["check"] = cfg.check_kind;
  std::string line;
  bool holds = true;

  if (cfg.check_kind == "eulerian" || cfg.check_kind == "half") {
    const KParam k = cfg.check_kind == "half" ? KParam::half() : KParam::parse(cfg.k);
    auto s = euler_summary(P, k, cfg.method);
    holds = s.holds && s.agree;
    line = s.text(k);
    j["k"] = k.to_string();
    j["eulerian"] = s.to_json();
    if (cfg.check_kind == "half") {
      const auto parity = is_half_eulerian_parity(P);
      j["parity"] = to_json(parity);
      line += std::string("; parity test: ") + (parity.holds ? "yes" : "no");
      if (parity.holds != s.holds) {
        holds = false;
        line += " (disagrees)";
      }
    }
  } else if (cfg.check_kind == "thick") {
    if (cfg.r < 1) throw Error(Errc::InvalidArgument, "--r must be positive");
    holds = is_r_thick(P, cfg.r);
    const bool local = is_r_thick_rank2(P, cfg.r);
    const int best = max_thickness(P);
    line = std::to_string(cfg.r) + "-thick: " + (holds ? "yes" : "no") + " (largest r: " + std::to_string(best) + ")";
    if (local != holds) line += "; rank-2 test disagrees";
    holds = holds && local == holds;
    j["r"] = cfg.r;
    j["holds"] = holds;
    j["largest_r"] = best;
  } else if (cfg.check_kind == "ds") {
    const KParam k = KParam::parse(cfg.k);
    const auto report = ds_residuals(flag_f_vector(P), k);
    holds = report.all_zero_f && report.all_zero_l;
    line = "DS_" + k.to_string() + " equations: " + (holds ? "all satisfied" : "violated");
    if (!report.all_zero_f) line += "; first nonzero " + first_ds_residual(report);
    j["ds"] = report.to_json();
  } else {
    throw Error(Errc::InvalidArgument, "unknown check " + cfg.check_kind);
  }

  j["holds"] = holds;
  if (cfg.format == Format::Json) emit(cfg, j);
  else emit(cfg, line + "\n");
  return holds ? kPass : kViolated;
}

int cmd_validate(const RunConfig& cfg) {
  require_not_csv(cfg);
  const auto a = load_functional(cfg);
  auto j = header(cfg);
  j["functional"] = a.to_json();
  j["digest"] = digest_hex(is_file(cfg.input) ? read_bytes(cfg.input) : cfg.input);
  j["mode"] = cfg.validate_mode;
  std::string line;
  bool valid = true;

  if (cfg.validate_mode == "rank8") {
    if (a.rank() != 8) throw Error(Errc::RankMismatch, "rank8 mode needs a functional on rank-8 posets");
    const auto corpus = half_eulerian_rank8_corpus(cfg.corpus, cfg.seed);
    std::vector<Rational> values(corpus.size());
    parallel_for(corpus.size(), cfg.jobs, [&](std::size_t i) { values[i] = evaluate(a, flag_f_vector(corpus[i])); });
    Rational minimum = values.empty() ? Rational(0) : values.front();
    std::size_t negative = 0;
    for (const auto& v : values) {
      if (v < minimum) minimum = v;
      negative += v < 0;
    }
    std::size_t zero_rows = 0;
    const auto rows = rank8_matrix().row_count();
    for (std::size_t r = 0; r < rows; ++r) zero_rows += evaluate_on_l(a, rank8_row_vector(r)) == 0;
    valid = negative == 0;
    line = std::string(valid ? "valid" : "invalid") + " on half-Eulerian corpus (" + std::to_string(corpus.size()) +
           " posets, minimum " + to_exact_string(minimum) + "); equality on " + std::to_string(zero_rows) + "/" +
           std::to_string(rows) + " fixture rows";
    j["corpus"] = corpus.size();
    j["minimum"] = to_exact_string(minimum);
    j["negative"] = negative;
    j["equality_rows"] = zero_rows;
  } else {
    ValidationOptions opts;
    if (cfg.validate_mode == "thick") {
      opts.mode = ValidationMode::RThick;
      opts.r = cfg.r;
    } else if (cfg.validate_mode != "graded") {
      throw Error(Errc::InvalidArgument, "unknown mode " + cfg.validate_mode);
    }
    opts.include_empty_system = cfg.include_empty_system;
    const auto result = validate_functional(a, opts);
    valid = result.valid;
    if (valid)
      line = "valid: " + std::to_string(result.systems_checked) + " interval systems, minimum blocking sum " +
             to_exact_string(result.minimum_sum);
    else
      line = "invalid: interval system " + (result.violating->empty() ? std::string("{}") : result.violating->to_string()) +
             " has blocking sum " + to_exact_string(result.violating_sum);
    j["systems_checked"] = result.systems_checked;
    j["minimum_sum"] = to_exact_string(result.minimum_sum);
    j["include_empty_system"] = cfg.include_empty_system;
    if (result.violating) {
      j["violating_system"] = result.violating->to_string();
      j["violating_sum"] = to_exact_string(result.violating_sum);
    }
  }
  j["valid"] = valid;
  if (cfg.format == Format::Json) emit(cfg, j);
  else emit(cfg, line + "\n");
  return valid ? kPass : kViolated;
}

int cmd_limit(const RunConfig& cfg) {
  require_not_csv(cfg);
  const auto family = parse_construction(cfg.input);
  LimitOptions opts;
  opts.k = KParam::parse(cfg.k);
  opts.norm_exponent = cfg.norm_exponent;
  opts.held_out = cfg.held_out;
  opts.order = cfg.order;
  auto j = header(cfg);
  j["family"] = to_string(family);
  j["digest"] = digest_hex(cfg.input);
  j["k"] = opts.k.to_string();
  j["norm_exponent"] = opts.norm_exponent;

  LimitResult result;
  try {
    result = limit_l_vector(family, opts);
  } catch (const Error& e) {
    if (e.code() != Errc::DegreeExceeded && e.code() != Errc::InterpolationMismatch) throw;
    j["error"] = {{"code", to_string(e.code())}, {"message", e.what()}};
    if (cfg.format == Format::Json) emit(cfg, j);
    else emit(cfg, std::string("limit failed (") + to_string(e.code()) + "): " + e.what() + "\n");
    return kViolated;
  }

  const auto row = matching_rank8_row(result.limit);
  j["degree_bound"] = result.degree_bound;
  j["samples"] = result.samples;
  j["checks"] = result.checks;
  j["limit"] = to_json(result.limit);
  if (row) j["fixture_row"] = *row;
  if (cfg.format == Format::Json) {
    emit(cfg, j);
    return kPass;
  }
  std::ostringstream out;
  out << to_string(family) << ": degree bound " << result.degree_bound << ", fitted at N = 1.." << result.samples.size()
      << ", checked at " << result.checks.size() << " more\n";
  out << "limit of L / N^" << opts.norm_exponent << " (nonzero entries):\n";
  for (std::size_t s = 0; s < result.limit.size(); ++s)
    if (result.limit.at_index(s) != 0)
      out << "  L" << RankSubset::from_bits(static_cast<std::uint32_t>(s)).to_braced() << " = "
          << to_exact_string(result.limit.at_index(s)) << "\n";
  if (result.limit.rank() == 8) out << "fixture row: " << (row ? std::to_string(*row) : std::string("none")) << "\n";
  emit(cfg, out.str());
  return kPass;
}

int cmd_certify_rank8(const RunConfig& cfg) {
  require_not_csv(cfg);
  Rank8Options opts;
  opts.corpus_size = cfg.corpus;
  opts.seed = cfg.seed;
  const auto report = rank8_certificate(opts);
  if (cfg.format == Format::Json) {
    auto j = header(cfg);
    j["certificate"] = report.to_json();
    emit(cfg, j);
  } else {
    std::ostringstream out;
    for (const auto& c : report.checks)
      out << (c.passed ? "PASS " : "FAIL ") << c.id << " " << c.description << ": " << c.detail << "\n";
    std::size_t matched = 0;
    for (const auto& m : report.matches) {
      out << "  " << m.source << " (" << m.construction << ", N^" << m.norm_exponent << ") -> row "
          << (m.row ? std::to_string(m.row) : std::string("none")) << "\n";
      matched += m.row != 0;
    }
    out << "matrix rank " << report.matrix_rank << "; " << matched << "/" << report.matches.size()
        << " constructed limit vectors matched to fixture rows; corpus " << report.corpus_size << " posets, minimum "
        << to_exact_string(report.corpus_minimum) << "\n";
    out << "certificate: " << (report.passed() ? "pass" : "fail") << "\n";
    emit(cfg, out.str());
  }
  return report.passed() ? kPass : kViolated;
}

int cmd_fuzz(const RunConfig& cfg) {
  require_not_csv(cfg);
  if (cfg.fuzz_mode == "identities") return fuzz_identities(cfg);
  if (cfg.fuzz_mode == "ds-witness") return fuzz_ds_witness(cfg);
  throw Error(Errc::InvalidArgument, "unknown fuzz mode " + cfg.fuzz_mode);
}

}  // namespace flagcone::tool
