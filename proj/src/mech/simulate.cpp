#include "nonindiv/mech/simulate.hpp"

#include <cmath>
#include <cstdio>
#include <memory>

#include "nonindiv/error.hpp"
#include "nonindiv/simd/kernels.hpp"

namespace nonindiv::mech {

std::string ForceLaw::name() const {
  char buf[64];
  switch (kind) {
    case Kind::None: return "none";
    case Kind::Gravity: std::snprintf(buf, sizeof buf, "gravity(gamma=%.12g)", strength); return buf;
    case Kind::Harmonic: std::snprintf(buf, sizeof buf, "harmonic(k=%.12g)", strength); return buf;
  }
  return "unknown";
}

InternalForce ForceLaw::internal() const {
  switch (kind) {
    case Kind::Gravity: return gravity_internal(strength);
    case Kind::Harmonic: return harmonic_internal(strength);
    case Kind::None: break;
  }
  return zero_internal();
}

std::size_t step_count(const Interval& iv, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidArgument("step h must be positive");
  const double len = iv.length();
  if (!(len > 0.0)) throw InvalidArgument("interval must have t1 > t0");
  const double steps = std::round(len / h);
  if (std::abs(steps * h - len) > 1e-9 * len) {
    throw InvalidArgument("interval length is not a whole number of steps");
  }
  if (steps < 4) throw InvalidArgument("interval must span at least 4 steps");
  return static_cast<std::size_t>(steps);
}

std::vector<std::vector<Vec3>> rk4_integrate(std::vector<Vec3> pos, std::vector<Vec3> vel,
                                             double t0, double h, std::size_t steps,
                                             const AccelFn& accel, const StepHook& hook) {
  const std::size_t n = pos.size();
  if (vel.size() != n) throw InvalidArgument("position and velocity counts differ");
  std::vector<std::vector<Vec3>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i].reserve(steps + 1);
    out[i].push_back(pos[i]);
  }

  std::vector<Vec3> k1x(n), k1v(n), k2x(n), k2v(n), k3x(n), k3v(n), k4x(n), k4v(n), tmp(n);
  auto eval = [&](double t, const std::vector<Vec3>& x, std::vector<Vec3>& a) {
    accel(t, x, a);
    for (std::size_t i = 0; i < n; ++i) {
      if (!is_finite(a[i])) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "non-finite acceleration at t = %.12g", t);
        throw StepRejected(buf);
      }
    }
  };

  for (std::size_t s = 0; s < steps; ++s) {
    const double t = t0 + h * static_cast<double>(s);
    k1x = vel;
    eval(t, pos, k1v);
    for (std::size_t i = 0; i < n; ++i) {
      k2x[i] = vel[i] + 0.5 * h * k1v[i];
      tmp[i] = pos[i] + 0.5 * h * k1x[i];
    }
    eval(t + 0.5 * h, tmp, k2v);
    for (std::size_t i = 0; i < n; ++i) {
      k3x[i] = vel[i] + 0.5 * h * k2v[i];
      tmp[i] = pos[i] + 0.5 * h * k2x[i];
    }
    eval(t + 0.5 * h, tmp, k3v);
    for (std::size_t i = 0; i < n; ++i) {
      k4x[i] = vel[i] + h * k3v[i];
      tmp[i] = pos[i] + h * k3x[i];
    }
    eval(t + h, tmp, k4v);
    for (std::size_t i = 0; i < n; ++i) {
      tmp[i] = pos[i] + (h / 6.0) * (k1x[i] + 2.0 * k2x[i] + 2.0 * k3x[i] + k4x[i]);
      vel[i] += (h / 6.0) * (k1v[i] + 2.0 * k2v[i] + 2.0 * k3v[i] + k4v[i]);
      if (!is_finite(tmp[i]) || !is_finite(vel[i])) throw StepRejected("non-finite state");
    }
    if (hook) hook(t, pos, tmp);
    pos.swap(tmp);
    for (std::size_t i = 0; i < n; ++i) out[i].push_back(pos[i]);
  }
  return out;
}

namespace {

AccelFn law_accel(const SimulationSpec& spec) {
  const std::size_t n = spec.bodies.size();
  std::vector<double> mass(n);
  std::vector<Vec3> ext(n);
  for (std::size_t i = 0; i < n; ++i) {
    mass[i] = spec.bodies[i].mass;
    if (!spec.external.empty()) ext[i] = spec.external[i] / mass[i];
  }
  const ForceLaw law = spec.law;
  switch (law.kind) {
    case ForceLaw::Kind::Gravity: {
      // Scratch buffers live in the closure; simulate() is single-threaded per call.
      struct Soa {
        std::vector<double> x, y, z, ax, ay, az;
      };
      auto soa = std::make_shared<Soa>(Soa{std::vector<double>(n), std::vector<double>(n),
                                           std::vector<double>(n), std::vector<double>(n),
                                           std::vector<double>(n), std::vector<double>(n)});
      return [=](double, std::span<const Vec3> pos, std::span<Vec3> acc) {
        for (std::size_t i = 0; i < n; ++i) {
          soa->x[i] = pos[i].x;
          soa->y[i] = pos[i].y;
          soa->z[i] = pos[i].z;
        }
        simd::gravity_accelerations({soa->x, soa->y, soa->z, mass}, law.strength,
                                    {soa->ax, soa->ay, soa->az});
        for (std::size_t i = 0; i < n; ++i) acc[i] = Vec3{soa->ax[i], soa->ay[i], soa->az[i]} + ext[i];
      };
    }
    case ForceLaw::Kind::Harmonic:
      return [=](double, std::span<const Vec3> pos, std::span<Vec3> acc) {
        for (std::size_t i = 0; i < n; ++i) {
          Vec3 f;
          for (std::size_t j = 0; j < n; ++j) f += law.strength * (pos[j] - pos[i]);
          acc[i] = f / mass[i] + ext[i];
        }
      };
    case ForceLaw::Kind::None: break;
  }
  return [=](double, std::span<const Vec3>, std::span<Vec3> acc) {
    for (std::size_t i = 0; i < n; ++i) acc[i] = ext[i];
  };
}

}  // namespace

MSSSystem simulate(const SimulationSpec& spec) {
  const std::size_t n = spec.bodies.size();
  if (n == 0) throw InvalidArgument("simulation needs at least one body");
  if (!spec.external.empty() && spec.external.size() != n) {
    throw InvalidArgument("external force list must match the body count");
  }
  for (const auto& b : spec.bodies) {
    if (!(b.mass > 0.0)) throw InvalidArgument("mass of '" + b.id + "' must be positive");
  }
  const std::size_t steps = step_count(spec.interval, spec.h);

  std::vector<Vec3> pos, vel;
  std::vector<ParticleId> ids;
  std::vector<double> masses;
  for (const auto& b : spec.bodies) {
    pos.push_back(b.position);
    vel.push_back(b.velocity);
    ids.push_back(b.id);
    masses.push_back(b.mass);
  }
  auto samples = rk4_integrate(std::move(pos), std::move(vel), spec.interval.t0, spec.h, steps,
                               law_accel(spec));

  std::vector<Trajectory> trajs;
  for (auto& s : samples) trajs.emplace_back(spec.interval.t0, spec.h, std::move(s));
  ForceField forces{spec.law.internal(),
                    spec.external.empty() ? zero_external() : constant_external(spec.external),
                    spec.law.name()};
  // Snap t1 to the integrated grid so validation sees matching endpoints.
  const Interval iv{spec.interval.t0, trajs.front().t1()};
  return MSSSystem(std::move(ids), iv, std::move(trajs), std::move(masses), std::move(forces));
}

}  // namespace nonindiv::mech
