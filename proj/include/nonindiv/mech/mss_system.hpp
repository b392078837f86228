#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "nonindiv/mech/trajectory.hpp"
#include "nonindiv/mech/vec3.hpp"

namespace nonindiv::mech {

using ParticleId = std::string;

struct Interval {
  double t0 = 0.0;
  double t1 = 0.0;
  double length() const noexcept { return t1 - t0; }
};

class MSSSystem;

/// Force on particle p exerted by particle q at time t (indices into the system).
using InternalForce = std::function<Vec3(const MSSSystem&, std::size_t p, std::size_t q, double t)>;
/// External force on particle p at time t.
using ExternalForce = std::function<Vec3(const MSSSystem&, std::size_t p, double t)>;

struct ForceField {
  InternalForce internal;
  ExternalForce external;
  std::string description;
};

InternalForce zero_internal();
ExternalForce zero_external();
ForceField zero_forces();

/// gamma m_p m_q (s_q - s_p) / |s_q - s_p|^3; zero for p == q.
InternalForce gravity_internal(double gamma);
/// k (s_q - s_p); zero for p == q.
InternalForce harmonic_internal(double k);
/// table[p][q][k] is f(p, q, t_k) on p's sample grid, linear in between.
InternalForce tabulated_internal(std::vector<std::vector<std::vector<Vec3>>> table);
/// One constant vector per particle.
ExternalForce constant_external(std::vector<Vec3> per_particle);
/// table[p][k] is g(p, t_k) on p's sample grid, linear in between.
ExternalForce tabulated_external(std::vector<std::vector<Vec3>> table);

/// Linear interpolation of per-sample values on traj's grid.
Vec3 grid_lerp(const Trajectory& traj, const std::vector<Vec3>& values, double t);

/// Immutable system of particle mechanics. The constructor checks only that
/// the per-particle maps are total and ids unique; the axioms are left to
/// validate() so that violations can be reported instead of thrown.
class MSSSystem {
 public:
  MSSSystem(std::vector<ParticleId> ids, Interval interval, std::vector<Trajectory> trajectories,
            std::vector<double> masses, ForceField forces);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::vector<ParticleId>& ids() const noexcept { return ids_; }
  const ParticleId& id(std::size_t i) const { return ids_.at(i); }
  /// Throws UnknownParticle.
  std::size_t index_of(const ParticleId& id) const;
  bool contains(const ParticleId& id) const noexcept;

  const Interval& interval() const noexcept { return interval_; }
  bool in_interval(double t) const noexcept;
  const Trajectory& trajectory(std::size_t i) const { return trajectories_.at(i); }
  const std::vector<Trajectory>& trajectories() const noexcept { return trajectories_; }
  double mass(std::size_t i) const { return masses_.at(i); }
  const std::vector<double>& masses() const noexcept { return masses_; }
  const ForceField& forces() const noexcept { return forces_; }

  Vec3 position(std::size_t i, double t) const { return trajectories_.at(i).position(t); }
  Vec3 accel(std::size_t i, double t) const { return trajectories_.at(i).accel(t); }
  Vec3 internal_force(std::size_t p, std::size_t q, double t) const { return forces_.internal(*this, p, q, t); }
  Vec3 external_force(std::size_t p, double t) const { return forces_.external(*this, p, t); }

  /// Sample times of the first trajectory; the default validation grid.
  std::vector<double> sample_grid() const;

 private:
  std::vector<ParticleId> ids_;
  Interval interval_;
  std::vector<Trajectory> trajectories_;
  std::vector<double> masses_;
  ForceField forces_;
};

}  // namespace nonindiv::mech
