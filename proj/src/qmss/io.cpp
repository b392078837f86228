#include "nonindiv/qmss/io.hpp"

#include <string>

#include "nonindiv/error.hpp"
#include "nonindiv/mech/io.hpp"

namespace nonindiv::qmss {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(std::string("missing key '") + key + "'");
  return j.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw ConfigError(std::string("'") + what + "' must be a number");
  return j.get<double>();
}

}  // namespace

GravitySpec gravity_spec_from_json(const json& j) {
  GravitySpec spec;
  const json& ens = require(j, "ensemble");
  const json& species = require(ens, "species");
  if (!species.is_string()) throw ConfigError("ensemble 'species' must be a string");
  spec.species = qset::Species(species.get<std::string>());
  const json& n = require(ens, "n");
  if (!n.is_number_unsigned() || n.get<std::uint64_t>() == 0) {
    throw ConfigError("ensemble 'n' must be a positive integer");
  }

  const json& bodies = require(j, "bodies");
  if (!bodies.is_array()) throw ConfigError("'bodies' must be an array");
  for (const json& b : bodies) {
    InitialState s;
    s.mass = number(require(b, "mass"), "mass");
    if (!(s.mass > 0.0)) throw ConfigError("masses must be positive");
    s.position = mech::vec3_from_json(require(b, "position"), "position");
    s.velocity = mech::vec3_from_json(require(b, "velocity"), "velocity");
    spec.bodies.push_back(s);
  }
  if (spec.bodies.size() != n.get<std::uint64_t>()) {
    throw ConfigError("ensemble 'n' must equal the number of bodies");
  }

  const json& law = require(j, "force_law");
  const json& name = require(law, "name");
  if (!name.is_string() || name.get<std::string>() != "gravity") {
    throw ConfigError("quasi-MSS scenarios support force_law 'gravity' only");
  }
  spec.gamma = number(require(law, "gamma"), "gamma");

  const json& iv = require(j, "interval");
  if (!iv.is_array() || iv.size() != 2) throw ConfigError("'interval' must be [t0, t1]");
  spec.interval = {number(iv[0], "interval"), number(iv[1], "interval")};
  spec.h = number(require(j, "h"), "h");
  if (j.contains("eps_min")) spec.eps_min = number(j.at("eps_min"), "eps_min");
  if (!(spec.eps_min > 0.0)) throw ConfigError("'eps_min' must be positive");
  try {
    mech::step_count(spec.interval, spec.h);
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  return spec;
}

}  // namespace nonindiv::qmss
