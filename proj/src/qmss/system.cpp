#include "nonindiv/qmss/system.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>

#include "nonindiv/error.hpp"
#include "nonindiv/qset/ops.hpp"

namespace nonindiv::qmss {

using mech::AxiomTracker;
using mech::ParticleId;

bool qparticle_indist(const QParticle& a, const QParticle& b, double eps) {
  const Trajectory& ta = a.traj;
  const Trajectory& tb = b.traj;
  if (ta.size() != tb.size() || ta.t0() != tb.t0() || ta.h() != tb.h()) {
    throw IntervalMismatch("particle trajectories are sampled on different grids");
  }
  if (a.mu.species != b.mu.species || a.mass != b.mass) return false;
  for (std::size_t k = 0; k < ta.size(); ++k) {
    if (norm(ta.samples()[k] - tb.samples()[k]) > eps) return false;
  }
  return true;
}

Vec3 newtonian_gravity(const QParticle& p1, const QParticle& p2, double t, double gamma) {
  const Vec3 d = p1.traj.position(t) - p2.traj.position(t);
  const double r = norm(d);
  if (r == 0.0) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "coincident positions at t = %.12g", t);
    throw SingularityError(buf, 0, 1, t);
  }
  return d * (gamma * p1.mass * p2.mass / (r * r * r));
}

InternalSpec InternalSpec::none() { return {}; }

InternalSpec InternalSpec::gravity(double gamma) {
  char name[64];
  std::snprintf(name, sizeof name, "gravity(gamma=%.12g)", gamma);
  return analytic(name, [gamma](double ma, const Vec3& sa, double mb, const Vec3& sb, double t) {
    const Vec3 d = sb - sa;
    const double r = norm(d);
    if (r == 0.0) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "gravity singular at t = %.12g", t);
      throw SingularityError(buf, 0, 1, t);
    }
    return d * (gamma * ma * mb / (r * r * r));
  });
}

InternalSpec InternalSpec::analytic(std::string name, PairLaw law) {
  InternalSpec s;
  s.name = std::move(name);
  s.law = std::move(law);
  return s;
}

InternalSpec InternalSpec::tabulated(std::vector<std::vector<std::vector<Vec3>>> table) {
  InternalSpec s;
  s.name = "tabulated";
  s.table = std::move(table);
  return s;
}

ExternalSpec ExternalSpec::none() { return {}; }

ExternalSpec ExternalSpec::uniform(const Vec3& field) {
  return analytic("uniform", [field](double, const Vec3&, double) { return field; });
}

ExternalSpec ExternalSpec::analytic(std::string name, FieldLaw law) {
  ExternalSpec s;
  s.name = std::move(name);
  s.law = std::move(law);
  return s;
}

ExternalSpec ExternalSpec::tabulated(std::vector<std::vector<Vec3>> table) {
  ExternalSpec s;
  s.name = "tabulated";
  s.table = std::move(table);
  return s;
}

qset::QSet make_ensemble(const qset::Species& species, std::uint64_t n) {
  return qset::QSetBuilder().add_micro(species, n).build();
}

QMSSSystem::QMSSSystem(qset::QSet ensemble, Interval interval, std::vector<QParticle> particles,
                       InternalSpec internal, ExternalSpec external)
    : ensemble_(std::move(ensemble)),
      interval_(interval),
      particles_(std::move(particles)),
      internal_(std::move(internal)),
      external_(std::move(external)) {}

Vec3 QMSSSystem::internal_force(std::size_t a, std::size_t b, double t) const {
  const QParticle& pa = particles_.at(a);
  const QParticle& pb = particles_.at(b);
  if (!internal_.table.empty()) return mech::grid_lerp(pa.traj, internal_.table.at(a).at(b), t);
  if (!internal_.law || a == b) return {};
  try {
    return internal_.law(pa.mass, pa.traj.position(t), pb.mass, pb.traj.position(t), t);
  } catch (const SingularityError& e) {
    throw SingularityError(e.what(), a, b, t);
  }
}

Vec3 QMSSSystem::external_force(std::size_t a, double t) const {
  const QParticle& pa = particles_.at(a);
  if (!external_.table.empty()) return mech::grid_lerp(pa.traj, external_.table.at(a), t);
  if (!external_.law) return {};
  return external_.law(pa.mass, pa.traj.position(t), t);
}

std::vector<double> QMSSSystem::sample_grid() const {
  std::vector<double> grid;
  if (particles_.empty()) return grid;
  const Trajectory& tr = particles_.front().traj;
  for (std::size_t k = 0; k < tr.size(); ++k) grid.push_back(tr.time_at(k));
  return grid;
}

std::string QMSSSystem::slot_label(std::size_t a) { return std::to_string(a); }

mech::MSSSystem QMSSSystem::as_mss() const {
  std::vector<ParticleId> ids;
  std::vector<Trajectory> trajs;
  std::vector<double> masses;
  for (std::size_t a = 0; a < particles_.size(); ++a) {
    ids.push_back(slot_label(a));
    trajs.push_back(particles_[a].traj);
    masses.push_back(particles_[a].mass);
  }
  auto self = std::make_shared<const QMSSSystem>(*this);
  mech::ForceField forces{
      [self](const mech::MSSSystem&, std::size_t p, std::size_t q, double t) {
        return self->internal_force(p, q, t);
      },
      [self](const mech::MSSSystem&, std::size_t p, double t) { return self->external_force(p, t); },
      internal_.name + " + " + external_.name};
  return mech::MSSSystem(std::move(ids), interval_, std::move(trajs), std::move(masses),
                         std::move(forces));
}

namespace {

std::vector<ParticleId> labels(std::initializer_list<std::size_t> slots) {
  std::vector<ParticleId> out;
  for (std::size_t s : slots) out.push_back(QMSSSystem::slot_label(s));
  return out;
}

bool on_grid(const Trajectory& tr, const Interval& iv) {
  const double slack = 1e-9 * tr.h();
  return std::abs(tr.t0() - iv.t0) <= slack && std::abs(tr.t1() - iv.t1) <= slack;
}

}  // namespace

mech::ValidationReport validate_q(const QMSSSystem& sys, double tol, const std::vector<double>& grid) {
  mech::ValidationReport report;
  report.tol = tol;
  const std::size_t n = sys.size();
  const Interval& iv = sys.interval();
  const qset::QSet& ens = sys.ensemble();

  // QP1: pure n-singleton of m-atoms, one species.
  AxiomTracker qp1("QP1");
  if (!ens.macro().empty() || !ens.subs().empty() || ens.micro().size() != 1) {
    qp1.fail_structural({}, iv.t0);
  }
  report.entries.push_back(qp1.finish(tol));

  AxiomTracker qp2("QP2");
  if (!(iv.t1 > iv.t0) || !std::isfinite(iv.t0) || !std::isfinite(iv.t1)) qp2.fail_structural({}, iv.t0);
  report.entries.push_back(qp2.finish(tol));

  AxiomTracker qp3("QP3");
  for (double t : grid) {
    if (t < iv.t0 - 1e-12 || t > iv.t1 + 1e-9 * std::max(1.0, iv.length())) qp3.fail_structural({}, t);
  }
  for (std::size_t a = 0; a < n; ++a) {
    const Trajectory& tr = sys.particle(a).traj;
    if (!on_grid(tr, iv)) {
      qp3.fail_structural(labels({a}), tr.t0());
      continue;
    }
    for (double t : grid) {
      try {
        if (!mech::is_finite(tr.accel(t))) qp3.fail_structural(labels({a}), t);
      } catch (const Error&) {
        qp3.fail_structural(labels({a}), t);
      }
    }
  }
  report.entries.push_back(qp3.finish(tol));

  AxiomTracker qp4("QP4");
  for (std::size_t a = 0; a < n; ++a) {
    const double m = sys.particle(a).mass;
    if (!(m > 0.0) || !std::isfinite(m)) qp4.fail_structural(labels({a}), iv.t0);
  }
  report.entries.push_back(qp4.finish(tol));

  // QP5: P ⊆ [x]_n × M × S with qc(P) = n.
  AxiomTracker qp5("QP5");
  if (n == 0 || qset::qc(ens).value() != n) qp5.fail_structural({}, iv.t0);
  for (std::size_t a = 0; a < n; ++a) {
    if (ens.micro().count(sys.particle(a).mu.species) == 0) qp5.fail_structural(labels({a}), iv.t0);
  }
  report.entries.push_back(qp5.finish(tol));

  // QP6 / QP7: the force quasi-functions are defined (finite) everywhere.
  AxiomTracker qp6("QP6");
  AxiomTracker qp7("QP7");
  for (double t : grid) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        try {
          if (!mech::is_finite(sys.internal_force(a, b, t))) qp6.fail_structural(labels({a, b}), t);
        } catch (const Error&) {
          qp6.fail_structural(labels({a, b}), t);
        }
      }
      try {
        if (!mech::is_finite(sys.external_force(a, t))) qp7.fail_structural(labels({a}), t);
      } catch (const Error&) {
        qp7.fail_structural(labels({a}), t);
      }
    }
  }
  report.entries.push_back(qp6.finish(tol));
  report.entries.push_back(qp7.finish(tol));

  AxiomTracker qp8("QP8");
  AxiomTracker qp9("QP9");
  AxiomTracker qp10("QP10");
  for (double t : grid) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        try {
          const Vec3 fab = sys.internal_force(a, b, t);
          const Vec3 fba = sys.internal_force(b, a, t);
          qp8.observe(norm(fab + fba), labels({a, b}), t);
          const Vec3 sa = sys.particle(a).traj.position(t);
          const Vec3 sb = sys.particle(b).traj.position(t);
          qp9.observe(norm(cross(sa, fab) + cross(sb, fba)), labels({a, b}), t);
        } catch (const Error&) {
          qp8.fail_structural(labels({a, b}), t);
          qp9.fail_structural(labels({a, b}), t);
        }
      }
      try {
        const QParticle& pa = sys.particle(a);
        Vec3 rhs = sys.external_force(a, t);
        for (std::size_t b = 0; b < n; ++b) {
          if (b != a) rhs += sys.internal_force(a, b, t);
        }
        qp10.observe(norm(pa.mass * pa.traj.accel(t) - rhs), labels({a}), t);
      } catch (const Error&) {
        qp10.fail_structural(labels({a}), t);
      }
    }
  }
  report.entries.push_back(qp8.finish(tol));
  report.entries.push_back(qp9.finish(tol));
  report.entries.push_back(qp10.finish(tol));

  // ≡ classes of slots (eps = 0 makes this an equivalence relation).
  std::vector<std::size_t> cls(n);
  for (std::size_t a = 0; a < n; ++a) {
    cls[a] = a;
    for (std::size_t b = 0; b < a; ++b) {
      bool same = false;
      try {
        same = qparticle_indist(sys.particle(a), sys.particle(b), 0.0);
      } catch (const IntervalMismatch&) {
      }
      if (same) {
        cls[a] = cls[b];
        break;
      }
    }
  }

  AxiomTracker congruence("congruence");
  AxiomTracker zero("indist_zero_force");
  auto residual = [](const Vec3& x, const Vec3& y) {
    return x == y ? 0.0 : std::max(norm(x - y), std::numeric_limits<double>::min());
  };
  for (double t : grid) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t a2 = 0; a2 < n; ++a2) {
        if (cls[a] != cls[a2]) continue;
        try {
          if (a2 > a) {
            congruence.observe(residual(sys.external_force(a, t), sys.external_force(a2, t)),
                               labels({a, a2}), t);
            // f(a, a2) = -f(a2, a) by QP8 and = f(a2, a) by congruence.
            zero.observe(norm(sys.internal_force(a, a2, t)), labels({a, a2}), t);
          }
          for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t b2 = 0; b2 < n; ++b2) {
              if (cls[b] != cls[b2] || (a == a2 && b == b2)) continue;
              if (a > a2 || (a == a2 && b > b2)) continue;  // each unordered tuple pair once
              congruence.observe(residual(sys.internal_force(a, b, t), sys.internal_force(a2, b2, t)),
                                 labels({a, b, a2, b2}), t);
            }
          }
        } catch (const Error&) {
          // undefined force values are QP6 failures, not congruence ones
        }
      }
    }
  }
  report.entries.push_back(congruence.finish(0.0));
  report.entries.push_back(zero.finish(0.0));
  return report;
}

mech::ValidationReport validate_q(const QMSSSystem& sys, double tol) {
  return validate_q(sys, tol, sys.sample_grid());
}

}  // namespace nonindiv::qmss
