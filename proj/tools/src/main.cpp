#include "commands.hpp"

#include <CLI11.hpp>

#include <nlohmann/json.hpp>

#include <functional>
#include <iostream>
#include <map>
#include <thread>

using namespace flagcone::tool;

namespace {

void add_input(CLI::App* cmd, RunConfig& cfg, const std::string& what = "construction (e.g. \"D2(C3)\") or poset JSON file") {
  cmd->add_option("input", cfg.input, what)->required();
}

void add_construction_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--N", cfg.N, "value of N in the construction");
  cmd->add_option("--order", cfg.order, "composition order of stacked range operators")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, flagcone::OperatorOrder>{{"inner", flagcone::OperatorOrder::InnermostFirst},
                                                         {"outer", flagcone::OperatorOrder::OutermostFirst}}));
}

void add_k(CLI::App* cmd, RunConfig& cfg) { cmd->add_option("--k", cfg.k, "k as \"j/2\" text")->capture_default_str(); }

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  cfg.jobs = std::max(1u, std::thread::hardware_concurrency());

  CLI::App app{"flagcone: flag vectors, k-Eulerian posets and flag-cone inequalities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", FLAGCONE_VERSION);
  app.add_option("--format", cfg.format, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}}))
      ->default_str("text");
  app.add_option("-o,--output", cfg.output, "output file (build: the poset file)");
  app.add_option("--seed", cfg.seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "worker threads for corpus commands")->check(CLI::PositiveNumber);

  std::map<std::string, std::function<int(const RunConfig&)>> handlers;
  auto sub = [&](const std::string& name, const std::string& help, int (*fn)(const RunConfig&)) {
    handlers[name] = fn;
    auto* cmd = app.add_subcommand(name, help);
    cmd->fallthrough();
    return cmd;
  };

  auto* build = sub("build", "evaluate a construction and write the poset", cmd_build);
  add_input(build, cfg, "construction, e.g. \"D[1,2]^2(C4)\"");
  add_construction_flags(build, cfg);

  auto* analyze = sub("analyze", "full report: flag vector, L-vector, mu_k, thickness, Eulerian verdicts", cmd_analyze);
  add_input(analyze, cfg);
  add_construction_flags(analyze, cfg);
  add_k(analyze, cfg);

  auto* flag = sub("flag", "flag f-vector", cmd_flag);
  add_input(flag, cfg);
  add_construction_flags(flag, cfg);

  auto* lvec = sub("lvector", "L^k-vector", cmd_lvector);
  add_input(lvec, cfg);
  add_construction_flags(lvec, cfg);
  add_k(lvec, cfg);

  auto* moebius = sub("moebius", "k-Moebius function of the whole poset", cmd_moebius);
  add_input(moebius, cfg);
  add_construction_flags(moebius, cfg);
  add_k(moebius, cfg);

  auto* check = sub("check", "test one property; exit 1 with a witness when it fails", cmd_check);
  check->add_option("property", cfg.check_kind, "eulerian | half | thick | ds")
      ->required()
      ->check(CLI::IsMember({"eulerian", "half", "thick", "ds"}));
  add_input(check, cfg);
  add_construction_flags(check, cfg);
  add_k(check, cfg);
  check->add_option("--r", cfg.r, "thickness to test")->capture_default_str();
  check->add_option("--method", cfg.method, "Eulerian criterion")->capture_default_str()
      ->check(CLI::IsMember({"all", "definition", "local-l", "mu-2k"}));

  auto* validate = sub("validate", "blocking-sum validation of a flag functional", cmd_validate);
  add_input(validate, cfg, "functional text (e.g. \"f13 - f1\") or functional file");
  validate->add_option("--n", cfg.n, "posets of rank n+1");
  add_k(validate, cfg);
  validate->add_option("--mode", cfg.validate_mode, "graded | thick | rank8")->capture_default_str()
      ->check(CLI::IsMember({"graded", "thick", "rank8"}));
  validate->add_option("--r", cfg.r, "thickness for --mode thick")->capture_default_str();
  validate->add_flag("--include-empty-system,!--exclude-empty-system", cfg.include_empty_system,
                     "count the empty interval system (default on)");
  validate->add_option("--corpus", cfg.corpus, "corpus size for --mode rank8")->capture_default_str();

  auto* limit = sub("limit", "normalized limit L-vector of a family in N", cmd_limit);
  add_input(limit, cfg, "construction depending on N, e.g. \"BH(7,[2,7])\"");
  add_construction_flags(limit, cfg);
  add_k(limit, cfg);
  limit->add_option("--m", cfg.norm_exponent, "normalize by N^m")->capture_default_str();
  limit->add_option("--held-out", cfg.held_out, "extra check points")->capture_default_str();

  auto* certify = sub("certify-rank8", "rank-8 facet certificate", cmd_certify_rank8);
  certify->add_option("--corpus", cfg.corpus, "half-Eulerian corpus size")->capture_default_str();

  auto* fuzz = sub("fuzz", "randomized identity checks and witness search", cmd_fuzz);
  fuzz->add_option("--mode", cfg.fuzz_mode, "identities | ds-witness")->capture_default_str()
      ->check(CLI::IsMember({"identities", "ds-witness"}));
  fuzz->add_option("--count", cfg.count, "posets or attempts")->capture_default_str();
  fuzz->add_option("--min-rank", cfg.min_rank, "")->capture_default_str();
  fuzz->add_option("--max-rank", cfg.max_rank, "")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  for (auto* cmd : app.get_subcommands()) {
    cfg.command = cmd->get_name();
    try {
      return handlers.at(cfg.command)(cfg);
    } catch (const flagcone::Error& e) {
      std::cerr << "flagcone " << cfg.command << ": " << e.what() << "\n";
      return kUsage;
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "flagcone " << cfg.command << ": bad input: " << e.what() << "\n";
      return kUsage;
    } catch (const std::exception& e) {
      std::cerr << "flagcone " << cfg.command << ": " << e.what() << "\n";
      return kUsage;
    }
  }
  return kUsage;
}
