#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nonindiv/mech/mss_system.hpp"

namespace nonindiv::mech {

inline constexpr double kDefaultAxiomTol = 1e-6;

struct Witness {
  std::vector<ParticleId> particles;
  double t = 0.0;
};

struct AxiomEntry {
  std::string axiom;
  bool pass = true;
  /// Structural failures (P1-P4, grid outside interval) report +inf.
  double max_residual = 0.0;
  /// pass == (max_residual <= tol). Exact checks use tol = 0.
  double tol = 0.0;
  std::optional<Witness> witness;
};

struct ValidationReport {
  std::vector<AxiomEntry> entries;
  double tol = kDefaultAxiomTol;

  bool all_pass() const noexcept;
  double max_residual() const noexcept;
  /// Throws InvalidArgument for unknown axiom names.
  const AxiomEntry& operator[](std::string_view axiom) const;
};

/// Accumulates one report entry: keeps the largest residual and where it
/// occurred. NaN counts as +inf.
struct AxiomTracker {
  AxiomEntry entry;

  explicit AxiomTracker(std::string name) { entry.axiom = std::move(name); }

  void observe(double residual, std::vector<ParticleId> who, double t) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (std::isnan(residual)) residual = inf;
    if (residual > entry.max_residual || (!entry.witness && residual == inf)) {
      entry.max_residual = residual;
      entry.witness = Witness{std::move(who), t};
    }
  }

  void fail_structural(std::vector<ParticleId> who, double t) {
    observe(std::numeric_limits<double>::infinity(), std::move(who), t);
  }

  AxiomEntry finish(double tol) {
    entry.tol = tol;
    entry.pass = entry.max_residual <= tol;
    if (entry.pass) entry.witness.reset();
    return std::move(entry);
  }
};

/// Checks P1..P7 at every grid time. P5 and P6 run over all ordered pairs
/// including p == q, so a nonzero self-force fails P5.
ValidationReport validate(const MSSSystem& sys, double tol, const std::vector<double>& grid);
ValidationReport validate(const MSSSystem& sys, double tol = kDefaultAxiomTol);

/// max over grid and particles of |m_p a_p - sum_q f(p,q) - g(p)|; +inf if
/// some term cannot be evaluated. Fills `where` with the worst location.
double newton_residual(const MSSSystem& sys, const std::vector<double>& grid,
                       std::optional<Witness>* where = nullptr);

}  // namespace nonindiv::mech
