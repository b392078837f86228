#include "nonindiv/mech/validate.hpp"

#include <cmath>

#include "nonindiv/error.hpp"

namespace nonindiv::mech {

namespace {

bool trajectory_matches_interval(const Trajectory& tr, const Interval& iv) {
  const double slack = 1e-9 * tr.h();
  return std::abs(tr.t0() - iv.t0) <= slack && std::abs(tr.t1() - iv.t1) <= slack;
}

}  // namespace

bool ValidationReport::all_pass() const noexcept {
  for (const auto& e : entries) {
    if (!e.pass) return false;
  }
  return true;
}

double ValidationReport::max_residual() const noexcept {
  double m = 0.0;
  for (const auto& e : entries) m = std::max(m, e.max_residual);
  return m;
}

const AxiomEntry& ValidationReport::operator[](std::string_view axiom) const {
  for (const auto& e : entries) {
    if (e.axiom == axiom) return e;
  }
  throw InvalidArgument("no report entry for " + std::string(axiom));
}

double newton_residual(const MSSSystem& sys, const std::vector<double>& grid,
                       std::optional<Witness>* where) {
  AxiomTracker tr("P7");
  const std::size_t n = sys.size();
  for (double t : grid) {
    for (std::size_t p = 0; p < n; ++p) {
      try {
        Vec3 rhs = sys.external_force(p, t);
        for (std::size_t q = 0; q < n; ++q) rhs += sys.internal_force(p, q, t);
        const Vec3 lhs = sys.mass(p) * sys.accel(p, t);
        tr.observe(norm(lhs - rhs), {sys.id(p)}, t);
      } catch (const Error&) {
        tr.fail_structural({sys.id(p)}, t);
      }
    }
  }
  if (where != nullptr) *where = tr.entry.witness;
  return tr.entry.max_residual;
}

ValidationReport validate(const MSSSystem& sys, double tol, const std::vector<double>& grid) {
  ValidationReport report;
  report.tol = tol;
  const std::size_t n = sys.size();
  const Interval& iv = sys.interval();

  AxiomTracker p1("P1");
  if (n == 0) p1.fail_structural({}, iv.t0);
  report.entries.push_back(p1.finish(tol));

  AxiomTracker p2("P2");
  if (!(iv.t1 > iv.t0) || !std::isfinite(iv.t0) || !std::isfinite(iv.t1)) p2.fail_structural({}, iv.t0);
  report.entries.push_back(p2.finish(tol));

  // P3: every trajectory lives on the shared interval and has a finite
  // second derivative at each grid point.
  AxiomTracker p3("P3");
  for (double t : grid) {
    if (!sys.in_interval(t)) p3.fail_structural({}, t);
  }
  for (std::size_t p = 0; p < n; ++p) {
    const Trajectory& tr = sys.trajectory(p);
    if (!trajectory_matches_interval(tr, iv)) {
      p3.fail_structural({sys.id(p)}, tr.t0());
      continue;
    }
    for (double t : grid) {
      try {
        if (!is_finite(tr.accel(t))) p3.fail_structural({sys.id(p)}, t);
      } catch (const Error&) {
        p3.fail_structural({sys.id(p)}, t);
      }
    }
  }
  report.entries.push_back(p3.finish(tol));

  AxiomTracker p4("P4");
  for (std::size_t p = 0; p < n; ++p) {
    const double m = sys.mass(p);
    if (!(m > 0.0) || !std::isfinite(m)) p4.fail_structural({sys.id(p)}, iv.t0);
  }
  report.entries.push_back(p4.finish(tol));

  AxiomTracker p5("P5");
  AxiomTracker p6("P6");
  for (double t : grid) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p; q < n; ++q) {
        try {
          const Vec3 fpq = sys.internal_force(p, q, t);
          const Vec3 fqp = sys.internal_force(q, p, t);
          p5.observe(norm(fpq + fqp), {sys.id(p), sys.id(q)}, t);
          const Vec3 torque =
              cross(sys.position(p, t), fpq) + cross(sys.position(q, t), fqp);
          p6.observe(norm(torque), {sys.id(p), sys.id(q)}, t);
        } catch (const Error&) {
          p5.fail_structural({sys.id(p), sys.id(q)}, t);
          p6.fail_structural({sys.id(p), sys.id(q)}, t);
        }
      }
    }
  }
  report.entries.push_back(p5.finish(tol));
  report.entries.push_back(p6.finish(tol));

  AxiomTracker p7("P7");
  p7.entry.max_residual = newton_residual(sys, grid, &p7.entry.witness);
  report.entries.push_back(p7.finish(tol));
  return report;
}

ValidationReport validate(const MSSSystem& sys, double tol) {
  return validate(sys, tol, sys.sample_grid());
}

}  // namespace nonindiv::mech
