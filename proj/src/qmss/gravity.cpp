#include "nonindiv/qmss/gravity.hpp"

#include <cmath>
#include <cstdio>
#include <memory>
#include <numbers>
#include <numeric>

#include "nonindiv/error.hpp"
#include "nonindiv/format.hpp"
#include "nonindiv/mech/simulate.hpp"
#include "nonindiv/simd/kernels.hpp"

namespace nonindiv::qmss {

namespace {

[[noreturn]] void singular(std::size_t i, std::size_t j, double t, const char* why) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "bodies %zu and %zu %s at t = %.12g", i, j, why, t);
  throw SingularityError(buf, i, j, t);
}

}  // namespace

double free_fall_time(double d0, double gamma, double m1, double m2) {
  return 0.5 * std::numbers::pi * std::sqrt(d0 * d0 * d0 / (2.0 * gamma * (m1 + m2)));
}

QMSSSystem simulate_gravity(const GravitySpec& spec) {
  const std::size_t n = spec.bodies.size();
  if (n == 0) throw InvalidArgument("gravity simulation needs at least one body");
  if (!(spec.eps_min > 0.0)) throw InvalidArgument("eps_min must be positive");
  const std::size_t steps = mech::step_count(spec.interval, spec.h);
  const double t0 = spec.interval.t0;
  const double h = spec.h;

  std::vector<Vec3> pos, vel;
  std::vector<double> mass;
  for (const auto& b : spec.bodies) {
    if (!(b.mass > 0.0)) throw InvalidArgument("masses must be positive");
    pos.push_back(b.position);
    vel.push_back(b.velocity);
    mass.push_back(b.mass);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (norm(pos[i] - pos[j]) <= spec.eps_min) singular(i, j, t0, "start within eps_min");
    }
  }

  // RK4 calls the acceleration exactly four times per step, in order, so a
  // call counter recovers the step being integrated.
  auto calls = std::make_shared<std::size_t>(0);
  std::vector<double> x(n), y(n), z(n), ax(n), ay(n), az(n);
  const double eps = spec.eps_min;
  mech::AccelFn accel = [&, calls](double, std::span<const Vec3> s, std::span<Vec3> a) {
    const double t_step = t0 + h * static_cast<double>((*calls)++ / 4);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (norm(s[i] - s[j]) < eps) singular(i, j, t_step, "closer than eps_min");
      }
      x[i] = s[i].x;
      y[i] = s[i].y;
      z[i] = s[i].z;
    }
    simd::gravity_accelerations({x, y, z, mass}, spec.gamma, {ax, ay, az});
    for (std::size_t i = 0; i < n; ++i) a[i] = {ax[i], ay[i], az[i]};
  };
  mech::StepHook hook = [&](double t_start, std::span<const Vec3> before, std::span<const Vec3> after) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const Vec3 r0 = before[i] - before[j];
        const Vec3 r1 = after[i] - after[j];
        if (norm(r1) < eps) singular(i, j, t_start, "closer than eps_min");
        // The separation vector flipping within one step means the bodies
        // passed through each other between samples.
        if (dot(r0, r1) <= 0.0) singular(i, j, t_start, "passed through each other");
      }
    }
  };

  std::vector<std::vector<Vec3>> samples;
  try {
    samples = mech::rk4_integrate(pos, vel, t0, h, steps, accel, hook);
  } catch (const StepRejected&) {
    // non-finite accelerations only arise from a collapse the guard missed
    throw SingularityError("non-finite gravitational acceleration", 0, 1, t0);
  }

  std::vector<QParticle> particles;
  for (auto& s : samples) {
    particles.push_back({qset::MicroAtom{spec.species}, mass[particles.size()],
                         Trajectory(t0, h, std::move(s))});
  }
  const Interval iv{t0, particles.front().traj.t1()};
  return QMSSSystem(make_ensemble(spec.species, n), iv, std::move(particles),
                    InternalSpec::gravity(spec.gamma), ExternalSpec::none());
}

bool IndividuationReport::fully_individuated() const noexcept {
  for (const auto& snap : snapshots) {
    for (const auto& c : snap.classes) {
      if (c.size() != 1) return false;
    }
  }
  return true;
}

IndividuationReport individuation_report(const QMSSSystem& sys, const std::vector<double>& times,
                                         double eps) {
  const std::size_t n = sys.size();
  IndividuationReport report;
  for (double t : times) {
    std::vector<Vec3> s(n), v(n);
    for (std::size_t a = 0; a < n; ++a) {
      s[a] = sys.particle(a).traj.position(t);
      v[a] = sys.particle(a).traj.velocity(t);
    }
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        const bool same = sys.particle(a).mu.species == sys.particle(b).mu.species &&
                          std::abs(sys.particle(a).mass - sys.particle(b).mass) <= eps &&
                          norm(s[a] - s[b]) <= eps && norm(v[a] - v[b]) <= eps;
        if (same) {
          const std::size_t ra = find(a), rb = find(b);
          parent[std::max(ra, rb)] = std::min(ra, rb);
        }
      }
    }
    IndividuationSnapshot snap{t, {}};
    std::vector<std::size_t> slot_of_root(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t r = find(a);
      if (slot_of_root[r] == n) {
        slot_of_root[r] = snap.classes.size();
        snap.classes.emplace_back();
      }
      snap.classes[slot_of_root[r]].push_back(a);
    }
    report.snapshots.push_back(std::move(snap));
  }
  return report;
}

void write_individuation_csv(std::ostream& out, const IndividuationReport& report) {
  out << "t,class_index,class_size\n";
  for (const auto& snap : report.snapshots) {
    for (std::size_t c = 0; c < snap.classes.size(); ++c) {
      out << fmt_real(snap.t) << ',' << c << ',' << snap.classes[c].size() << '\n';
    }
  }
}

}  // namespace nonindiv::qmss
