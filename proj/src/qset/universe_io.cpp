#include "nonindiv/qset/universe_io.hpp"

#include <fstream>
#include <sstream>

#include "nonindiv/error.hpp"

namespace nonindiv::qset {

namespace {

std::uint64_t read_count(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return 1;
  const auto& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw ConfigError(std::string("'") + key + "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

}  // namespace

QSet universe_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("universe description must be a JSON object");
  QSetBuilder b;
  if (j.contains("species")) {
    for (const auto& s : j.at("species")) {
      if (!s.contains("label")) throw ConfigError("species entry without 'label'");
      b.add_micro(Species(s.at("label").get<std::string>()), read_count(s, "count"));
    }
  }
  if (j.contains("macro")) {
    for (const auto& id : j.at("macro")) b.add_macro(MacroId(id.get<std::string>()));
  }
  if (j.contains("collections")) {
    for (const auto& c : j.at("collections")) {
      if (!c.contains("members")) throw ConfigError("collection entry without 'members'");
      b.add_sub(universe_from_json(c.at("members")), read_count(c, "multiplicity"));
    }
  }
  return std::move(b).build();
}

nlohmann::ordered_json universe_to_json(const QSet& q) {
  nlohmann::ordered_json j;
  j["species"] = nlohmann::ordered_json::array();
  for (const auto& [s, n] : q.micro()) {
    nlohmann::ordered_json e;
    e["label"] = s.label();
    e["count"] = n.value();
    j["species"].push_back(std::move(e));
  }
  j["macro"] = nlohmann::ordered_json::array();
  for (const auto& id : q.macro()) j["macro"].push_back(id.str());
  j["collections"] = nlohmann::ordered_json::array();
  for (const auto& s : q.subs()) {
    nlohmann::ordered_json e;
    e["multiplicity"] = s.multiplicity.value();
    e["members"] = universe_to_json(s.representative);
    j["collections"].push_back(std::move(e));
  }
  return j;
}

QSet parse_universe(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("universe description: ") + e.what());
  }
  try {
    return universe_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("universe description: ") + e.what());
  }
}

std::string dump_universe(const QSet& q) { return universe_to_json(q).dump(2) + "\n"; }

QSet load_universe(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_universe(ss.str());
}

void save_universe(const std::filesystem::path& path, const QSet& q) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << dump_universe(q);
}

}  // namespace nonindiv::qset
