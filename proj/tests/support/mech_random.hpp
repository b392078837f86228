#pragma once

// Random mechanical systems for the theorem property tests. Each system is
// a set of bodies coupled by springs with random symmetric constants (some
// zero) in constant random external fields, integrated with RK4, so it
// satisfies P1..P7 up to integration and stencil error.

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "nonindiv/mech/simulate.hpp"

namespace testsupport {

using namespace nonindiv::mech;

struct RandomSystemOptions {
  std::size_t min_bodies = 2;
  std::size_t max_bodies = 4;
  double h = 1e-3;
  double t1 = 0.5;
  double coupling_probability = 0.5;
};

using Matrix = std::vector<std::vector<double>>;

inline Matrix random_symmetric(std::mt19937_64& rng, std::size_t n, double p_nonzero, double lo,
                               double hi) {
  std::bernoulli_distribution coin(p_nonzero);
  std::uniform_real_distribution<double> val(lo, hi);
  Matrix k(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) k[i][j] = k[j][i] = val(rng);
    }
  }
  return k;
}

/// f(p, q) = K_pq (s_q - s_p): antisymmetric and central for symmetric K.
inline InternalForce spring_forces(Matrix k) {
  auto shared = std::make_shared<const Matrix>(std::move(k));
  return [shared](const MSSSystem& sys, std::size_t p, std::size_t q, double t) {
    const double c = (*shared)[p][q];
    if (c == 0.0) return Vec3{};
    return c * (sys.position(q, t) - sys.position(p, t));
  };
}

inline MSSSystem random_spring_system(std::mt19937_64& rng, const RandomSystemOptions& opt = {}) {
  std::uniform_int_distribution<std::size_t> count(opt.min_bodies, opt.max_bodies);
  std::uniform_real_distribution<double> mass(0.5, 2.0), pos(-1.0, 1.0), vel(-0.5, 0.5),
      field(-1.0, 1.0);
  const std::size_t n = count(rng);
  const Matrix k = random_symmetric(rng, n, opt.coupling_probability, 0.1, 1.0);
  std::vector<ParticleId> ids;
  std::vector<double> masses;
  std::vector<Vec3> p0, v0, g;
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back("b" + std::to_string(i));
    masses.push_back(mass(rng));
    p0.push_back({pos(rng), pos(rng), pos(rng)});
    v0.push_back({vel(rng), vel(rng), vel(rng)});
    g.push_back({field(rng), field(rng), field(rng)});
  }
  const std::size_t steps = step_count({0.0, opt.t1}, opt.h);
  auto samples = rk4_integrate(
      p0, v0, 0.0, opt.h, steps,
      [&](double, std::span<const Vec3> s, std::span<Vec3> a) {
        for (std::size_t i = 0; i < n; ++i) {
          Vec3 f = g[i];
          for (std::size_t j = 0; j < n; ++j) f += k[i][j] * (s[j] - s[i]);
          a[i] = f / masses[i];
        }
      });
  std::vector<Trajectory> trajs;
  for (auto& s : samples) trajs.emplace_back(0.0, opt.h, std::move(s));
  const Interval iv{0.0, trajs.front().t1()};
  return MSSSystem(ids, iv, std::move(trajs), masses,
                   {spring_forces(k), constant_external(g), "random springs"});
}

/// Same trajectories and masses; internal forces get an extra random
/// central antisymmetric term and g absorbs its negation.
inline MSSSystem resplit(const MSSSystem& sys, std::mt19937_64& rng) {
  const std::size_t n = sys.size();
  auto base = std::make_shared<const MSSSystem>(sys);
  auto delta = std::make_shared<const Matrix>(random_symmetric(rng, n, 1.0, -2.0, 2.0));
  InternalForce internal = [base, delta](const MSSSystem&, std::size_t p, std::size_t q, double t) {
    return base->internal_force(p, q, t) +
           (*delta)[p][q] * (base->position(q, t) - base->position(p, t));
  };
  ExternalForce external = [base, delta](const MSSSystem&, std::size_t p, double t) {
    Vec3 g = base->external_force(p, t);
    for (std::size_t q = 0; q < base->size(); ++q) {
      g -= (*delta)[p][q] * (base->position(q, t) - base->position(p, t));
    }
    return g;
  };
  return MSSSystem(sys.ids(), sys.interval(), sys.trajectories(), sys.masses(),
                   {std::move(internal), std::move(external), "resplit"});
}

}  // namespace testsupport
