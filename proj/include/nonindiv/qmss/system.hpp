#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "nonindiv/mech/mss_system.hpp"
#include "nonindiv/mech/validate.hpp"
#include "nonindiv/qset/qset.hpp"

namespace nonindiv::qmss {

using mech::Interval;
using mech::Trajectory;
using mech::Vec3;

/// (m-atom, mass, trajectory). The m-atom carries no identity; only its
/// species is observable.
struct QParticle {
  qset::MicroAtom mu;
  double mass = 0.0;
  Trajectory traj;
};

/// ≡ on particle triples: same species, exactly equal masses, trajectories
/// equal samplewise within eps. Throws IntervalMismatch when the grids differ.
bool qparticle_indist(const QParticle& a, const QParticle& b, double eps = 0.0);

/// gamma m1 m2 (s1 - s2) / |s1 - s2|^3 at time t: the pull on p2 toward p1.
/// Antisymmetric under swapping arguments. Throws SingularityError (pair
/// 0, 1) when the positions coincide.
Vec3 newtonian_gravity(const QParticle& p1, const QParticle& p2, double t, double gamma);

/// Force on a particle of mass m_a at s_a exerted by one of mass m_b at s_b.
using PairLaw = std::function<Vec3(double m_a, const Vec3& s_a, double m_b, const Vec3& s_b, double t)>;
using FieldLaw = std::function<Vec3(double m, const Vec3& s, double t)>;

/// Internal force quasi-function. Analytic laws see only (mass, state,
/// time), so they are congruent by construction; tables are indexed by
/// particle slot and need the explicit congruence check.
struct InternalSpec {
  std::string name = "none";
  PairLaw law;
  std::vector<std::vector<std::vector<Vec3>>> table;  // [a][b][sample]

  static InternalSpec none();
  static InternalSpec gravity(double gamma);
  static InternalSpec analytic(std::string name, PairLaw law);
  static InternalSpec tabulated(std::vector<std::vector<std::vector<Vec3>>> table);
};

struct ExternalSpec {
  std::string name = "none";
  FieldLaw law;
  std::vector<std::vector<Vec3>> table;  // [a][sample]

  static ExternalSpec none();
  static ExternalSpec uniform(const Vec3& field);
  static ExternalSpec analytic(std::string name, FieldLaw law);
  static ExternalSpec tabulated(std::vector<std::vector<Vec3>> table);
};

/// The pure quasi-set holding n m-atoms of one species.
qset::QSet make_ensemble(const qset::Species& species, std::uint64_t n);

class QMSSSystem {
 public:
  /// Only shape is enforced here; the axioms are left to validate_q.
  QMSSSystem(qset::QSet ensemble, Interval interval, std::vector<QParticle> particles,
             InternalSpec internal, ExternalSpec external);

  const qset::QSet& ensemble() const noexcept { return ensemble_; }
  const Interval& interval() const noexcept { return interval_; }
  const std::vector<QParticle>& particles() const noexcept { return particles_; }
  std::size_t size() const noexcept { return particles_.size(); }
  const QParticle& particle(std::size_t a) const { return particles_.at(a); }
  const InternalSpec& internal_spec() const noexcept { return internal_; }
  const ExternalSpec& external_spec() const noexcept { return external_; }

  /// Force on slot a from slot b. Zero for a == b with analytic laws.
  Vec3 internal_force(std::size_t a, std::size_t b, double t) const;
  Vec3 external_force(std::size_t a, double t) const;

  std::vector<double> sample_grid() const;
  /// Slot labels used in reports and exports: "0", "1", ...
  static std::string slot_label(std::size_t a);
  /// The same dynamics with classical labels, for export and reuse.
  mech::MSSSystem as_mss() const;

 private:
  qset::QSet ensemble_;
  Interval interval_;
  std::vector<QParticle> particles_;
  InternalSpec internal_;
  ExternalSpec external_;
};

/// QP1..QP10 plus "congruence" (≡ argument tuples give identical force
/// vectors) and "indist_zero_force" (f between ≡ particles is the zero
/// vector). The last two are exact: tol 0. QP10 sums the n - 1 counterpart
/// terms; the self term is covered by QP8.
mech::ValidationReport validate_q(const QMSSSystem& sys, double tol, const std::vector<double>& grid);
mech::ValidationReport validate_q(const QMSSSystem& sys, double tol = mech::kDefaultAxiomTol);

}  // namespace nonindiv::qmss
