#pragma once

#include <optional>
#include <vector>

#include "nonindiv/mech/mss_system.hpp"
#include "nonindiv/mech/validate.hpp"

namespace nonindiv::mech {

/// s, m, g restricted to `keep`, f restricted to keep x keep. The result
/// shares the parent's force laws. Throws EmptySelection / UnknownParticle.
MSSSystem restrict(const MSSSystem& parent, const std::vector<ParticleId>& keep);

/// Predicate reading of the subsystem definition: the restriction satisfies
/// the Newton equation (P7) within tol at every grid time.
bool is_subsystem(const MSSSystem& parent, const std::vector<ParticleId>& keep, double tol,
                  const std::vector<double>& grid);
bool is_subsystem(const MSSSystem& parent, const std::vector<ParticleId>& keep,
                  double tol = kDefaultAxiomTol);

/// Restriction with g'(p) = g(p) + sum_{q not kept} f(p, q). Not part of the
/// axiomatics; this is the bookkeeping variant that always re-validates.
MSSSystem absorb_external(const MSSSystem& parent, const std::vector<ParticleId>& keep);

/// Same ids, interval, samples (within tol) and masses; forces ignored.
bool equivalent(const MSSSystem& a, const MSSSystem& b, double tol = 1e-12);

struct IsolationResult {
  bool isolated = true;
  std::optional<Witness> witness;
  explicit operator bool() const noexcept { return isolated; }
};

/// g(p, t) == (0, 0, 0) exactly at every grid time.
IsolationResult is_isolated(const MSSSystem& sys, const std::vector<double>& grid);
IsolationResult is_isolated(const MSSSystem& sys);

/// sum_q f(p, q, t) + g(p, t). Throws UnknownParticle / OutOfInterval.
Vec3 total_applied_force(const MSSSystem& sys, const ParticleId& p, double t);

/// First time the witness separation d(t) of embed_isolated_uniform reaches
/// zero for a particle of mass m_p under constant force magnitude g.
double embedding_horizon(double t0, double g, double m_p, double m_e);

/// Isolated extension of a non-interacting system in constant per-particle
/// fields: one environment particle "env:<id>" of mass m_e per forced
/// particle, tethered by the force g_p. Throws InvalidArgument if f is not
/// zero or g not constant on the sample grid, DegenerateWitness if some
/// d(t) vanishes inside the interval.
MSSSystem embed_isolated_uniform(const MSSSystem& sys, double m_e);

/// Sum of m v and of m s x v at sample k, with finite-difference velocities.
Vec3 total_momentum(const MSSSystem& sys, std::size_t k);
Vec3 total_angular_momentum(const MSSSystem& sys, std::size_t k);
/// max_k |X(k) - X(0)| for X one of the two totals above.
double momentum_drift(const MSSSystem& sys);
double angular_momentum_drift(const MSSSystem& sys);

}  // namespace nonindiv::mech
