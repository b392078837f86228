#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "nonindiv/qset/qset.hpp"

namespace nonindiv::qset {

// Universe description format (JSON):
//
//   {
//     "species":     [ {"label": "electron", "count": 3}, ... ],
//     "macro":       [ "a", "b" ],
//     "collections": [ {"multiplicity": 2, "members": { ...same shape... }} ]
//   }
//
// Every key is optional on input. Output always carries all three keys in that
// order, species sorted by label, macro ids sorted, collections in stored
// order, so serialization of a QSet is byte-stable.

QSet universe_from_json(const nlohmann::json& j);
nlohmann::ordered_json universe_to_json(const QSet& q);

QSet parse_universe(const std::string& text);
std::string dump_universe(const QSet& q);

QSet load_universe(const std::filesystem::path& path);
void save_universe(const std::filesystem::path& path, const QSet& q);

}  // namespace nonindiv::qset
