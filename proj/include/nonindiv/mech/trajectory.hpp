#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nonindiv/mech/vec3.hpp"

namespace nonindiv::mech {

/// Position samples s(t0 + k h), k = 0..n-1, n >= 5.
///
/// Derivatives at samples use fixed stencils: 5-point central in the
/// interior, 4-point one-sided at the two samples nearest each end. Between
/// samples, positions and derivatives are cubic (4-point Lagrange)
/// interpolants of the sampled values. Fixed stencils make every derivative
/// a deterministic function of the samples.
class Trajectory {
 public:
  static constexpr std::size_t kMinSamples = 5;

  /// Throws InvalidArgument when h <= 0 or fewer than 5 samples are given.
  Trajectory(double t0, double h, std::vector<Vec3> samples);

  double t0() const noexcept { return t0_; }
  double t1() const noexcept { return t0_ + h_ * static_cast<double>(samples_.size() - 1); }
  double h() const noexcept { return h_; }
  std::size_t size() const noexcept { return samples_.size(); }
  const std::vector<Vec3>& samples() const noexcept { return samples_; }
  double time_at(std::size_t k) const noexcept { return t0_ + h_ * static_cast<double>(k); }

  bool contains(double t) const noexcept;
  /// Sample index when t sits on the grid (to 1e-9 of a step).
  std::optional<std::size_t> sample_index(double t) const noexcept;

  /// Throw OutOfInterval outside [t0, t1].
  Vec3 position(double t) const;
  Vec3 velocity(double t) const;
  Vec3 accel(double t) const;

  Vec3 velocity_at(std::size_t k) const;
  Vec3 accel_at(std::size_t k) const;

 private:
  template <typename AtSample>
  Vec3 interpolate(double t, AtSample at) const;

  double t0_;
  double h_;
  std::vector<Vec3> samples_;
};

/// Sample-wise comparison; false unless both share t0, h and length.
bool same_samples(const Trajectory& a, const Trajectory& b, double tol);

}  // namespace nonindiv::mech
