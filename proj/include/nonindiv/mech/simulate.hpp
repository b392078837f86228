#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "nonindiv/mech/mss_system.hpp"

namespace nonindiv::mech {

struct Body {
  ParticleId id;
  double mass = 0.0;
  Vec3 position;
  Vec3 velocity;
};

struct ForceLaw {
  enum class Kind { None, Gravity, Harmonic };
  Kind kind = Kind::None;
  /// gamma for gravity, spring constant for harmonic; unused for None.
  double strength = 0.0;

  std::string name() const;
  InternalForce internal() const;
};

struct SimulationSpec {
  std::vector<Body> bodies;
  ForceLaw law;
  /// Constant external force per body; empty means none.
  std::vector<Vec3> external;
  double h = 0.0;
  Interval interval;
};

/// Number of RK4 steps covering `iv` with step h. Throws InvalidArgument
/// unless the length is a whole number (>= 4) of steps to 1e-9 relative.
std::size_t step_count(const Interval& iv, double h);

/// Writes accelerations for the positions at time t. May throw to abort.
using AccelFn = std::function<void(double t, std::span<const Vec3> pos, std::span<Vec3> acc)>;
/// Called after each accepted step with the positions before and after.
using StepHook =
    std::function<void(double t_start, std::span<const Vec3> before, std::span<const Vec3> after)>;

/// Classical RK4 for s'' = a(t, s). Returns samples[body][k] for k = 0..steps.
/// Throws StepRejected when an acceleration or state is not finite.
std::vector<std::vector<Vec3>> rk4_integrate(std::vector<Vec3> pos, std::vector<Vec3> vel,
                                             double t0, double h, std::size_t steps,
                                             const AccelFn& accel, const StepHook& hook = {});

/// Integrates `spec` and wraps the samples in an MSSSystem carrying the
/// same force law, so validate() measures integration plus stencil error.
MSSSystem simulate(const SimulationSpec& spec);

}  // namespace nonindiv::mech
