#pragma once

#include <json.hpp>

#include "nonindiv/qmss/gravity.hpp"

namespace nonindiv::qmss {

// Scenario file: the mechanics system description plus an ensemble block.
//   {
//     "ensemble": {"species": "e", "n": 3},
//     "bodies": [{"mass": 1, "position": [x, y, z], "velocity": [x, y, z]}, ...],
//     "force_law": {"name": "gravity", "gamma": 1},
//     "interval": [t0, t1],
//     "h": 0.001,
//     "eps_min": 1e-6                    optional
//   }
// Bodies may carry an "id"; it is ignored, slots are what identify rows.
// n must equal the number of bodies. Errors throw ConfigError.
GravitySpec gravity_spec_from_json(const nlohmann::json& j);

}  // namespace nonindiv::qmss
