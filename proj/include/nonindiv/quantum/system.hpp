#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nonindiv/qset/qset.hpp"
#include "nonindiv/quantum/observable.hpp"
#include "nonindiv/random.hpp"

namespace nonindiv::quantum {

/// Ordered tuple of reals (mass, |spin|, charge, ...). Arity is fixed per system.
struct IntrinsicProps {
  std::vector<double> values;
  bool operator==(const IntrinsicProps&) const = default;
};

struct TimeInterval {
  double t0 = 0.0;
  double t1 = 1.0;
};

/// From t_start on (until the next segment) the particle has these props and state.
struct AssignmentSegment {
  double t_start = 0.0;
  IntrinsicProps props;
  StateVector state = z_plus();
};

/// Finite set of labelled particles with a piecewise-constant assignment
/// id x time -> (props, state).
class QuantumSystem {
 public:
  /// Throws InvalidArgument on empty or duplicate ids, t1 <= t0, a particle
  /// without segments, segments not starting at t0 or not strictly
  /// increasing, or mixed props arity; DimensionMismatch when a state or
  /// observable does not live in C^dim.
  QuantumSystem(std::vector<std::string> ids, TimeInterval interval, std::size_t dim,
                std::vector<Observable> observables,
                std::map<std::string, std::vector<AssignmentSegment>> assignment);

  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const TimeInterval& interval() const noexcept { return interval_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Observable>& observables() const noexcept { return observables_; }
  /// Throws InvalidArgument for an unknown name.
  const Observable& observable(const std::string& name) const;

  /// Throws UnknownParticle or OutOfInterval.
  const AssignmentSegment& at(const std::string& id, double t) const;
  const IntrinsicProps& props(const std::string& id, double t) const { return at(id, t).props; }
  const StateVector& state(const std::string& id, double t) const { return at(id, t).state; }

 private:
  std::vector<std::string> ids_;
  TimeInterval interval_;
  std::size_t dim_;
  std::vector<Observable> observables_;
  std::map<std::string, std::vector<AssignmentSegment>> assignment_;
};

/// [<x, i_p, u>]_n: n indistinguishable members sharing species, props and state.
class QuasiQuantumSystem {
 public:
  QuasiQuantumSystem(qset::Species species, IntrinsicProps props, StateVector state, std::uint64_t n);

  const qset::Species& species() const noexcept { return species_; }
  const IntrinsicProps& props() const noexcept { return props_; }
  const StateVector& state() const noexcept { return state_; }
  std::uint64_t size() const noexcept { return n_; }
  /// [x]_n over the bare species.
  const qset::QSet& ensemble() const noexcept { return ensemble_; }
  /// Quasi-set of member triples; its one ≡-class is labelled by the triple.
  const qset::QSet& members() const noexcept { return members_; }
  /// The micro-atom standing for any member.
  qset::MicroAtom member() const { return qset::MicroAtom{member_species_}; }

 private:
  qset::Species species_;
  IntrinsicProps props_;
  StateVector state_;
  std::uint64_t n_;
  qset::Species member_species_;
  qset::QSet ensemble_;
  qset::QSet members_;
};

/// Canonical label of (species, props, state), exact via hex floats.
std::string member_label(const qset::Species& species, const IntrinsicProps& props, const StateVector& u);

/// Throws InvalidArgument for n == 0.
QuasiQuantumSystem ensemble(const qset::Species& species, const IntrinsicProps& props, const StateVector& u,
                            std::uint64_t n);

struct CollapseRecord {
  qset::MacroId id;
  MeasurementRecord record;
};

inline constexpr std::uint64_t kMaxCollapseMembers = 10'000'000;

/// One measurement per member, each tagged with a macro id "<species>#<k>".
/// Throws DimensionMismatch, or TooLarge above kMaxCollapseMembers.
std::vector<CollapseRecord> collapse_ensemble(const QuasiQuantumSystem& x, const Observable& o, Rng& rng);

/// The macro-atoms of a collapse, as a set.
qset::QSet collapsed_qset(const std::vector<CollapseRecord>& records);

}  // namespace nonindiv::quantum
