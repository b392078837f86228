#include "nonindiv/mech/mss_system.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "nonindiv/error.hpp"

namespace nonindiv::mech {

InternalForce zero_internal() {
  return [](const MSSSystem&, std::size_t, std::size_t, double) { return Vec3{}; };
}

ExternalForce zero_external() {
  return [](const MSSSystem&, std::size_t, double) { return Vec3{}; };
}

ForceField zero_forces() { return {zero_internal(), zero_external(), "none"}; }

InternalForce gravity_internal(double gamma) {
  return [gamma](const MSSSystem& sys, std::size_t p, std::size_t q, double t) {
    if (p == q) return Vec3{};
    const Vec3 d = sys.position(q, t) - sys.position(p, t);
    const double r = norm(d);
    return d * (gamma * sys.mass(p) * sys.mass(q) / (r * r * r));
  };
}

InternalForce harmonic_internal(double k) {
  return [k](const MSSSystem& sys, std::size_t p, std::size_t q, double t) {
    if (p == q) return Vec3{};
    return k * (sys.position(q, t) - sys.position(p, t));
  };
}

Vec3 grid_lerp(const Trajectory& traj, const std::vector<Vec3>& values, double t) {
  if (values.size() != traj.size()) throw InvalidArgument("force table length differs from sample count");
  if (!traj.contains(t)) throw OutOfInterval("force table queried outside its grid");
  if (const auto k = traj.sample_index(t)) return values[*k];
  const double u = (t - traj.t0()) / traj.h();
  const auto k = std::min(static_cast<std::size_t>(std::max(0.0, std::floor(u))), traj.size() - 2);
  const double w = u - static_cast<double>(k);
  return (1.0 - w) * values[k] + w * values[k + 1];
}

InternalForce tabulated_internal(std::vector<std::vector<std::vector<Vec3>>> table) {
  auto shared = std::make_shared<const std::vector<std::vector<std::vector<Vec3>>>>(std::move(table));
  return [shared](const MSSSystem& sys, std::size_t p, std::size_t q, double t) {
    return grid_lerp(sys.trajectory(p), shared->at(p).at(q), t);
  };
}

ExternalForce constant_external(std::vector<Vec3> per_particle) {
  auto shared = std::make_shared<const std::vector<Vec3>>(std::move(per_particle));
  return [shared](const MSSSystem&, std::size_t p, double) { return shared->at(p); };
}

ExternalForce tabulated_external(std::vector<std::vector<Vec3>> table) {
  auto shared = std::make_shared<const std::vector<std::vector<Vec3>>>(std::move(table));
  return [shared](const MSSSystem& sys, std::size_t p, double t) {
    return grid_lerp(sys.trajectory(p), shared->at(p), t);
  };
}

MSSSystem::MSSSystem(std::vector<ParticleId> ids, Interval interval,
                     std::vector<Trajectory> trajectories, std::vector<double> masses,
                     ForceField forces)
    : ids_(std::move(ids)),
      interval_(interval),
      trajectories_(std::move(trajectories)),
      masses_(std::move(masses)),
      forces_(std::move(forces)) {
  if (trajectories_.size() != ids_.size() || masses_.size() != ids_.size()) {
    throw InvalidArgument("ids, trajectories and masses must have equal length");
  }
  if (std::set<ParticleId>(ids_.begin(), ids_.end()).size() != ids_.size()) {
    throw InvalidArgument("duplicate particle id");
  }
  if (!forces_.internal) forces_.internal = zero_internal();
  if (!forces_.external) forces_.external = zero_external();
}

std::size_t MSSSystem::index_of(const ParticleId& id) const {
  const auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) throw UnknownParticle("unknown particle '" + id + "'");
  return static_cast<std::size_t>(it - ids_.begin());
}

bool MSSSystem::contains(const ParticleId& id) const noexcept {
  return std::find(ids_.begin(), ids_.end(), id) != ids_.end();
}

bool MSSSystem::in_interval(double t) const noexcept {
  const double slack = 1e-9 * std::max(1.0, std::abs(interval_.length()));
  return t >= interval_.t0 - slack && t <= interval_.t1 + slack;
}

std::vector<double> MSSSystem::sample_grid() const {
  std::vector<double> grid;
  if (trajectories_.empty()) return grid;
  const Trajectory& tr = trajectories_.front();
  grid.reserve(tr.size());
  for (std::size_t k = 0; k < tr.size(); ++k) grid.push_back(tr.time_at(k));
  return grid;
}

}  // namespace nonindiv::mech
