#include "nonindiv/mech/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nonindiv/error.hpp"

namespace nonindiv::mech {

namespace {

constexpr double kGridSnap = 1e-9;

}  // namespace

Trajectory::Trajectory(double t0, double h, std::vector<Vec3> samples)
    : t0_(t0), h_(h), samples_(std::move(samples)) {
  if (!(h_ > 0.0) || !std::isfinite(h_)) throw InvalidArgument("trajectory step must be positive");
  if (samples_.size() < kMinSamples) {
    throw InvalidArgument("trajectory needs at least 5 samples, got " +
                          std::to_string(samples_.size()));
  }
}

bool Trajectory::contains(double t) const noexcept {
  const double slack = kGridSnap * h_;
  return t >= t0_ - slack && t <= t1() + slack;
}

std::optional<std::size_t> Trajectory::sample_index(double t) const noexcept {
  if (!contains(t)) return std::nullopt;
  const double u = (t - t0_) / h_;
  const double k = std::round(u);
  if (std::abs(u - k) > kGridSnap) return std::nullopt;
  return static_cast<std::size_t>(std::clamp(k, 0.0, static_cast<double>(samples_.size() - 1)));
}

template <typename AtSample>
Vec3 Trajectory::interpolate(double t, AtSample at) const {
  if (!contains(t)) {
    throw OutOfInterval("t = " + std::to_string(t) + " outside [" + std::to_string(t0_) + ", " +
                        std::to_string(t1()) + "]");
  }
  if (const auto k = sample_index(t)) return at(*k);
  const double u = (t - t0_) / h_;
  const auto n = static_cast<std::ptrdiff_t>(samples_.size());
  const std::ptrdiff_t base =
      std::clamp(static_cast<std::ptrdiff_t>(std::floor(u)) - 1, std::ptrdiff_t{0}, n - 4);
  const double x = u - static_cast<double>(base);  // nodes at 0, 1, 2, 3
  const double w0 = -(x - 1) * (x - 2) * (x - 3) / 6.0;
  const double w1 = x * (x - 2) * (x - 3) / 2.0;
  const double w2 = -x * (x - 1) * (x - 3) / 2.0;
  const double w3 = x * (x - 1) * (x - 2) / 6.0;
  const auto b = static_cast<std::size_t>(base);
  return w0 * at(b) + w1 * at(b + 1) + w2 * at(b + 2) + w3 * at(b + 3);
}

Vec3 Trajectory::position(double t) const {
  return interpolate(t, [this](std::size_t k) { return samples_[k]; });
}

Vec3 Trajectory::velocity(double t) const {
  return interpolate(t, [this](std::size_t k) { return velocity_at(k); });
}

Vec3 Trajectory::accel(double t) const {
  return interpolate(t, [this](std::size_t k) { return accel_at(k); });
}

Vec3 Trajectory::velocity_at(std::size_t k) const {
  const auto& s = samples_;
  const std::size_t n = s.size();
  if (k >= 2 && k + 2 < n) {
    return (s[k - 2] - 8.0 * s[k - 1] + 8.0 * s[k + 1] - s[k + 2]) / (12.0 * h_);
  }
  if (k < 2) return (-11.0 * s[k] + 18.0 * s[k + 1] - 9.0 * s[k + 2] + 2.0 * s[k + 3]) / (6.0 * h_);
  return (11.0 * s[k] - 18.0 * s[k - 1] + 9.0 * s[k - 2] - 2.0 * s[k - 3]) / (6.0 * h_);
}

Vec3 Trajectory::accel_at(std::size_t k) const {
  const auto& s = samples_;
  const std::size_t n = s.size();
  const double h2 = h_ * h_;
  if (k >= 2 && k + 2 < n) {
    return (-1.0 * s[k - 2] + 16.0 * s[k - 1] - 30.0 * s[k] + 16.0 * s[k + 1] - s[k + 2]) /
           (12.0 * h2);
  }
  if (k < 2) return (2.0 * s[k] - 5.0 * s[k + 1] + 4.0 * s[k + 2] - s[k + 3]) / h2;
  return (2.0 * s[k] - 5.0 * s[k - 1] + 4.0 * s[k - 2] - s[k - 3]) / h2;
}

bool same_samples(const Trajectory& a, const Trajectory& b, double tol) {
  if (a.size() != b.size() || a.t0() != b.t0() || a.h() != b.h()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (norm(a.samples()[k] - b.samples()[k]) > tol) return false;
  }
  return true;
}

}  // namespace nonindiv::mech
