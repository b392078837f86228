#include "nonindiv/mech/io.hpp"

#include <string>

#include "nonindiv/error.hpp"
#include "nonindiv/format.hpp"

namespace nonindiv::mech {

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

Vec3 vec3_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 3) {
    throw ConfigError(std::string("'") + what + "' must be a 3-element array");
  }
  return {number(j[0], what), number(j[1], what), number(j[2], what)};
}

SimulationSpec simulation_spec_from_json(const json& j) {
  SimulationSpec spec;
  const json& bodies = require(j, "bodies");
  if (!bodies.is_array() || bodies.empty()) throw ConfigError("'bodies' must be a nonempty array");
  for (const json& b : bodies) {
    Body body;
    const json& id = require(b, "id");
    if (!id.is_string()) throw ConfigError("body 'id' must be a string");
    body.id = id.get<std::string>();
    body.mass = number(require(b, "mass"), "mass");
    if (!(body.mass > 0.0)) throw ConfigError("mass of '" + body.id + "' must be positive");
    body.position = vec3_from_json(require(b, "position"), "position");
    body.velocity = vec3_from_json(require(b, "velocity"), "velocity");
    spec.bodies.push_back(std::move(body));
  }

  const json& law = require(j, "force_law");
  const json& name = require(law, "name");
  if (!name.is_string()) throw ConfigError("force_law 'name' must be a string");
  const auto law_name = name.get<std::string>();
  if (law_name == "none") {
    spec.law = {ForceLaw::Kind::None, 0.0};
  } else if (law_name == "gravity") {
    spec.law = {ForceLaw::Kind::Gravity, number(require(law, "gamma"), "gamma")};
  } else if (law_name == "harmonic") {
    spec.law = {ForceLaw::Kind::Harmonic, number(require(law, "k"), "k")};
  } else {
    throw ConfigError("unknown force law '" + law_name + "'");
  }

  if (j.contains("external")) {
    const json& ext = j.at("external");
    if (!ext.is_array() || ext.size() != spec.bodies.size()) {
      throw ConfigError("'external' must list one vector per body");
    }
    for (const json& g : ext) spec.external.push_back(vec3_from_json(g, "external"));
  }

  const json& iv = require(j, "interval");
  if (!iv.is_array() || iv.size() != 2) throw ConfigError("'interval' must be [t0, t1]");
  spec.interval = {number(iv[0], "interval"), number(iv[1], "interval")};
  spec.h = number(require(j, "h"), "h");
  try {
    step_count(spec.interval, spec.h);
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  return spec;
}

void write_trajectory_csv(std::ostream& out, const MSSSystem& sys) {
  out << "particle,t,x,y,z\n";
  for (std::size_t p = 0; p < sys.size(); ++p) {
    const Trajectory& tr = sys.trajectory(p);
    const std::string id = csv_field(sys.id(p));
    for (std::size_t k = 0; k < tr.size(); ++k) {
      const Vec3& s = tr.samples()[k];
      out << id << ',' << fmt_real(tr.time_at(k)) << ',' << fmt_real(s.x) << ',' << fmt_real(s.y)
          << ',' << fmt_real(s.z) << '\n';
    }
  }
}

void write_report_jsonl(std::ostream& out, const ValidationReport& report) {
  for (const auto& e : report.entries) {
    JsonLine line;
    line.str("axiom", e.axiom).boolean("pass", e.pass).real("max_residual", e.max_residual);
    line.real("tol", e.tol);
    if (e.witness) {
      std::string who = "[";
      for (std::size_t i = 0; i < e.witness->particles.size(); ++i) {
        if (i) who += ',';
        who += json_string(e.witness->particles[i]);
      }
      who += "]";
      line.raw("witness_particles", who).real("witness_t", e.witness->t);
    } else {
      line.raw("witness_particles", "null").raw("witness_t", "null");
    }
    out << line.done();
  }
}

}  // namespace nonindiv::mech
