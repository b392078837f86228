#pragma once

#include <ostream>

#include <json.hpp>

#include "nonindiv/mech/mss_system.hpp"
#include "nonindiv/mech/simulate.hpp"
#include "nonindiv/mech/validate.hpp"

namespace nonindiv::mech {

// System description (JSON):
//   {
//     "bodies": [{"id": "a", "mass": 1, "position": [x, y, z], "velocity": [x, y, z]}, ...],
//     "force_law": {"name": "gravity", "gamma": 1} | {"name": "harmonic", "k": 2} | {"name": "none"},
//     "external": [[gx, gy, gz], ...],      optional, one per body
//     "interval": [t0, t1],
//     "h": 0.001
//   }
// Every key except "external" is required. Errors throw ConfigError.

Vec3 vec3_from_json(const nlohmann::json& j, const char* what);
SimulationSpec simulation_spec_from_json(const nlohmann::json& j);

/// Header `particle,t,x,y,z`, one row per particle per sample.
void write_trajectory_csv(std::ostream& out, const MSSSystem& sys);
/// One JSON object per axiom.
void write_report_jsonl(std::ostream& out, const ValidationReport& report);

}  // namespace nonindiv::mech
