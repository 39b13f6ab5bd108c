#pragma once

#include "flagcone/constructions.hpp"
#include "flagcone/types.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace flagcone::tool {

enum class Format { Text, Json, Csv };

/// Exit codes shared by every subcommand.
inline constexpr int kPass = 0;
inline constexpr int kViolated = 1;
inline constexpr int kUsage = 2;

struct RunConfig {
  std::string command;
  std::string input;  // DSL text or poset file path
  std::string k = "1";
  int r = 1;
  std::optional<int> n;
  std::optional<std::int64_t> N;
  OperatorOrder order = OperatorOrder::InnermostFirst;
  Format format = Format::Text;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  bool include_empty_system = true;
  std::string output;  // empty: stdout

  // command specific
  std::string check_kind;       // eulerian | half | thick | ds
  std::string method = "all";   // definition | local-l | mu-2k | all
  std::string validate_mode = "graded";  // graded | thick | rank8
  std::string fuzz_mode = "identities";  // identities | ds-witness
  int norm_exponent = 0;
  int held_out = 1;
  std::size_t count = 200;
  int min_rank = 2;
  int max_rank = 6;
  std::size_t corpus = 500;
};

int cmd_build(const RunConfig& cfg);
int cmd_analyze(const RunConfig& cfg);
int cmd_flag(const RunConfig& cfg);
int cmd_lvector(const RunConfig& cfg);
int cmd_moebius(const RunConfig& cfg);
int cmd_check(const RunConfig& cfg);
int cmd_validate(const RunConfig& cfg);
int cmd_limit(const RunConfig& cfg);
int cmd_certify_rank8(const RunConfig& cfg);
int cmd_fuzz(const RunConfig& cfg);

}  // namespace flagcone::tool
