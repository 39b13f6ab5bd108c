#include "flagcone/poset_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace flagcone {

nlohmann::json poset_to_json(const GradedPoset& P) {
  nlohmann::json elements = nlohmann::json::array();
  for (Element x = 0; x < P.size(); ++x) {
    nlohmann::json e{{"id", P.id(x)}, {"rank", P.rank_of(x)}};
    if (P.has_coordinates()) e["label"] = P.coordinate(x).to_string();
    elements.push_back(std::move(e));
  }
  nlohmann::json covers = nlohmann::json::array();
  for (auto [x, y] : P.covers()) covers.push_back({P.id(x), P.id(y)});
  return {{"rank", P.rank()}, {"elements", std::move(elements)}, {"covers", std::move(covers)}};
}

GradedPoset poset_from_json(const nlohmann::json& j) {
  try {
    PosetDraft d;
    d.rank = j.at("rank").get<int>();
    for (const auto& e : j.at("elements")) {
      PosetDraft::Node node{e.at("id").get<std::int64_t>(), e.at("rank").get<int>(), std::nullopt};
      if (e.contains("label")) node.coordinate = Coordinate::parse(e.at("label").get<std::string>());
      d.elements.push_back(std::move(node));
    }
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2) throw Error(Errc::ParseError, "cover entries must be [x, y] pairs");
      d.covers.emplace_back(c[0].get<std::int64_t>(), c[1].get<std::int64_t>());
    }
    return build_poset(d);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::ParseError, std::string("poset JSON: ") + ex.what());
  }
}

GradedPoset read_poset_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::ParseError, path.string() + ": " + ex.what());
  }
  return poset_from_json(j);
}

void write_poset_file(const GradedPoset& P, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path.string());
  out << poset_to_json(P).dump(1) << '\n';
}

std::string digest_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace flagcone
