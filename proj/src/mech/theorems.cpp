#include "nonindiv/mech/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <limits>
#include <set>
#include <string>

#include "nonindiv/error.hpp"

namespace nonindiv::mech {

namespace {

struct Selection {
  std::shared_ptr<const MSSSystem> parent;
  std::vector<std::size_t> map;  // child index -> parent index
};

Selection select(const MSSSystem& parent, const std::vector<ParticleId>& keep) {
  if (keep.empty()) throw EmptySelection("particle selection is empty");
  Selection sel{std::make_shared<const MSSSystem>(parent), {}};
  std::set<ParticleId> seen;
  for (const auto& id : keep) {
    if (!seen.insert(id).second) throw InvalidArgument("particle '" + id + "' selected twice");
    sel.map.push_back(parent.index_of(id));
  }
  return sel;
}

MSSSystem build_restricted(const Selection& sel, const std::vector<ParticleId>& keep,
                           ExternalForce external, std::string description) {
  std::vector<Trajectory> trajs;
  std::vector<double> masses;
  for (std::size_t i : sel.map) {
    trajs.push_back(sel.parent->trajectory(i));
    masses.push_back(sel.parent->mass(i));
  }
  InternalForce internal = [parent = sel.parent, map = sel.map](const MSSSystem&, std::size_t p,
                                                                std::size_t q, double t) {
    return parent->internal_force(map[p], map[q], t);
  };
  return MSSSystem(keep, sel.parent->interval(), std::move(trajs), std::move(masses),
                   {std::move(internal), std::move(external), std::move(description)});
}

}  // namespace

MSSSystem restrict(const MSSSystem& parent, const std::vector<ParticleId>& keep) {
  Selection sel = select(parent, keep);
  ExternalForce external = [parent = sel.parent, map = sel.map](const MSSSystem&, std::size_t p,
                                                                double t) {
    return parent->external_force(map[p], t);
  };
  return build_restricted(sel, keep, std::move(external),
                          "restriction of " + parent.forces().description);
}

bool is_subsystem(const MSSSystem& parent, const std::vector<ParticleId>& keep, double tol,
                  const std::vector<double>& grid) {
  return newton_residual(restrict(parent, keep), grid) <= tol;
}

bool is_subsystem(const MSSSystem& parent, const std::vector<ParticleId>& keep, double tol) {
  return is_subsystem(parent, keep, tol, parent.sample_grid());
}

MSSSystem absorb_external(const MSSSystem& parent, const std::vector<ParticleId>& keep) {
  Selection sel = select(parent, keep);
  std::vector<std::size_t> dropped;
  for (std::size_t i = 0; i < parent.size(); ++i) {
    if (std::find(sel.map.begin(), sel.map.end(), i) == sel.map.end()) dropped.push_back(i);
  }
  ExternalForce external = [parent = sel.parent, map = sel.map, dropped](
                               const MSSSystem&, std::size_t p, double t) {
    Vec3 g = parent->external_force(map[p], t);
    for (std::size_t q : dropped) g += parent->internal_force(map[p], q, t);
    return g;
  };
  return build_restricted(sel, keep, std::move(external),
                          "absorbed restriction of " + parent.forces().description);
}

bool equivalent(const MSSSystem& a, const MSSSystem& b, double tol) {
  if (a.size() != b.size()) return false;
  if (a.interval().t0 != b.interval().t0 || a.interval().t1 != b.interval().t1) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b.contains(a.id(i))) return false;
    const std::size_t j = b.index_of(a.id(i));
    const double ma = a.mass(i);
    const double mb = b.mass(j);
    if (std::abs(ma - mb) > tol * std::max(1.0, std::abs(ma))) return false;
    if (!same_samples(a.trajectory(i), b.trajectory(j), tol)) return false;
  }
  return true;
}

IsolationResult is_isolated(const MSSSystem& sys, const std::vector<double>& grid) {
  for (double t : grid) {
    for (std::size_t p = 0; p < sys.size(); ++p) {
      if (sys.external_force(p, t) != Vec3{}) return {false, Witness{{sys.id(p)}, t}};
    }
  }
  return {};
}

IsolationResult is_isolated(const MSSSystem& sys) { return is_isolated(sys, sys.sample_grid()); }

Vec3 total_applied_force(const MSSSystem& sys, const ParticleId& id, double t) {
  const std::size_t p = sys.index_of(id);
  if (!sys.in_interval(t)) throw OutOfInterval("time outside the system interval");
  Vec3 total = sys.external_force(p, t);
  for (std::size_t q = 0; q < sys.size(); ++q) total += sys.internal_force(p, q, t);
  return total;
}

double embedding_horizon(double t0, double g, double m_p, double m_e) {
  return t0 + std::sqrt(2.0 / (g * (1.0 / m_e + 1.0 / m_p)));
}

MSSSystem embed_isolated_uniform(const MSSSystem& sys, double m_e) {
  if (!(m_e > 0.0)) throw InvalidArgument("environment mass must be positive");
  const std::vector<double> grid = sys.sample_grid();
  const std::size_t n = sys.size();
  if (grid.empty()) throw InvalidArgument("system has no particles");

  std::vector<Vec3> field(n);
  for (std::size_t p = 0; p < n; ++p) {
    field[p] = sys.external_force(p, grid.front());
    for (double t : grid) {
      if (sys.external_force(p, t) != field[p]) {
        throw InvalidArgument("external force on '" + sys.id(p) + "' is not constant");
      }
      for (std::size_t q = 0; q < n; ++q) {
        if (sys.internal_force(p, q, t) != Vec3{}) {
          throw InvalidArgument("embedding requires vanishing internal forces");
        }
      }
    }
  }

  const Interval iv = sys.interval();
  double earliest = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> forced;
  for (std::size_t p = 0; p < n; ++p) {
    const double g = norm(field[p]);
    if (g == 0.0) continue;
    forced.push_back(p);
    earliest = std::min(earliest, embedding_horizon(iv.t0, g, sys.mass(p), m_e));
  }
  if (forced.empty()) return sys;
  if (earliest <= iv.t1) {
    throw DegenerateWitness("witness separation vanishes at t = " + std::to_string(earliest) +
                                "; shrink the interval or raise m_e",
                            earliest);
  }

  std::vector<ParticleId> ids = sys.ids();
  std::vector<Trajectory> trajs = sys.trajectories();
  std::vector<double> masses = sys.masses();
  // partner[i] = index of the particle tethered to i, or npos.
  std::vector<std::size_t> partner(n + forced.size(), static_cast<std::size_t>(-1));
  std::vector<Vec3> tether(n + forced.size());
  for (std::size_t j = 0; j < forced.size(); ++j) {
    const std::size_t p = forced[j];
    const std::size_t e = n + j;
    const Vec3 g = field[p];
    const double gn = norm(g);
    const Vec3 dir = g / gn;
    const double rate = 0.5 * gn * (1.0 / m_e + 1.0 / sys.mass(p));
    const Trajectory& tp = sys.trajectory(p);
    std::vector<Vec3> samples;
    samples.reserve(tp.size());
    for (std::size_t k = 0; k < tp.size(); ++k) {
      const double dt = tp.time_at(k) - iv.t0;
      samples.push_back(tp.samples()[k] + (1.0 - rate * dt * dt) * dir);
    }
    ids.push_back("env:" + sys.id(p));
    trajs.emplace_back(tp.t0(), tp.h(), std::move(samples));
    masses.push_back(m_e);
    partner[p] = e;
    partner[e] = p;
    tether[p] = g;
    tether[e] = -g;
  }

  InternalForce internal = [partner, tether](const MSSSystem&, std::size_t p, std::size_t q,
                                             double) {
    return partner.at(p) == q ? tether[p] : Vec3{};
  };
  return MSSSystem(std::move(ids), iv, std::move(trajs), std::move(masses),
                   {std::move(internal), zero_external(), "uniform-field embedding"});
}

Vec3 total_momentum(const MSSSystem& sys, std::size_t k) {
  Vec3 total;
  for (std::size_t p = 0; p < sys.size(); ++p) total += sys.mass(p) * sys.trajectory(p).velocity_at(k);
  return total;
}

Vec3 total_angular_momentum(const MSSSystem& sys, std::size_t k) {
  Vec3 total;
  for (std::size_t p = 0; p < sys.size(); ++p) {
    const Trajectory& tr = sys.trajectory(p);
    total += sys.mass(p) * cross(tr.samples()[k], tr.velocity_at(k));
  }
  return total;
}

namespace {

template <typename Total>
double drift(const MSSSystem& sys, Total total) {
  if (sys.size() == 0) return 0.0;
  const std::size_t n = sys.trajectory(0).size();
  const Vec3 start = total(sys, 0);
  double worst = 0.0;
  for (std::size_t k = 1; k < n; ++k) worst = std::max(worst, norm(total(sys, k) - start));
  return worst;
}

}  // namespace

double momentum_drift(const MSSSystem& sys) { return drift(sys, total_momentum); }
double angular_momentum_drift(const MSSSystem& sys) { return drift(sys, total_angular_momentum); }

}  // namespace nonindiv::mech
