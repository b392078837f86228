#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "nonindiv/qmss/system.hpp"

namespace nonindiv::qmss {

inline constexpr double kDefaultEpsMin = 1e-6;

struct InitialState {
  double mass = 0.0;
  Vec3 position;
  Vec3 velocity;
};

struct GravitySpec {
  qset::Species species{"x"};
  std::vector<InitialState> bodies;
  double gamma = 1.0;
  double h = 0.0;
  double eps_min = kDefaultEpsMin;
  Interval interval;
};

/// RK4 n-body gravity through the SIMD kernel. Throws SingularityError
/// naming the pair and the start of the offending step when two bodies come
/// within eps_min (checked at every RK stage) or pass through each other
/// within one step. Initial separations must exceed eps_min.
QMSSSystem simulate_gravity(const GravitySpec& spec);

/// Analytic collision time of two bodies released at rest at distance d0.
double free_fall_time(double d0, double gamma, double m1, double m2);

struct IndividuationSnapshot {
  double t = 0.0;
  /// Slots per class, each class sorted, classes ordered by smallest slot.
  std::vector<std::vector<std::size_t>> classes;
};

struct IndividuationReport {
  std::vector<IndividuationSnapshot> snapshots;
  /// Every snapshot has exactly n singleton classes.
  bool fully_individuated() const noexcept;
};

/// Partition at each time by ≡ on (mass, position, velocity) within eps,
/// closed transitively (union-find).
IndividuationReport individuation_report(const QMSSSystem& sys, const std::vector<double>& times,
                                         double eps);

/// CSV `t,class_index,class_size`.
void write_individuation_csv(std::ostream& out, const IndividuationReport& report);

}  // namespace nonindiv::qmss
