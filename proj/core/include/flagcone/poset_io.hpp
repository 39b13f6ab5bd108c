#pragma once

#include "flagcone/poset.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace flagcone {

/// { "rank": n+1, "elements": [{"id": int, "rank": int, "label"?: "base:i.j"}], "covers": [[int,int]] }
nlohmann::json poset_to_json(const GradedPoset& P);
GradedPoset poset_from_json(const nlohmann::json& j);

GradedPoset read_poset_file(const std::filesystem::path& path);
void write_poset_file(const GradedPoset& P, const std::filesystem::path& path);

/// 64-bit FNV-1a digest, hex encoded; used to fingerprint inputs in reports.
std::string digest_hex(std::string_view bytes);

}  // namespace flagcone
