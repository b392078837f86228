#include "nonindiv/quantum/state.hpp"

#include <cmath>

#include "nonindiv/error.hpp"

namespace nonindiv::quantum {

namespace {

double norm_of(const std::vector<Complex>& a) {
  double s = 0.0;
  for (const auto& c : a) s += std::norm(c);
  return std::sqrt(s);
}

}  // namespace

StateVector::StateVector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw InvalidArgument("state vector must have positive dimension");
  const double n = norm_of(amps_);
  if (!(std::abs(n - 1.0) <= kNormTol)) throw InvalidArgument("state vector is not normalized");
}

StateVector StateVector::normalized(std::vector<Complex> amplitudes) {
  if (amplitudes.empty()) throw InvalidArgument("state vector must have positive dimension");
  const double n = norm_of(amplitudes);
  if (!(n > 0.0) || !std::isfinite(n)) throw InvalidArgument("cannot normalize a zero vector");
  for (auto& c : amplitudes) c /= n;
  return StateVector(std::move(amplitudes), Unchecked{});
}

StateVector StateVector::basis(std::size_t dim, std::size_t k) {
  if (k >= dim) throw InvalidArgument("basis index out of range");
  std::vector<Complex> a(dim);
  a[k] = 1.0;
  return StateVector(std::move(a));
}

double StateVector::norm() const noexcept { return norm_of(amps_); }

Complex inner(const StateVector& u, const StateVector& v) {
  if (u.dim() != v.dim()) throw DimensionMismatch("states have different dimensions");
  Complex acc{};
  for (std::size_t i = 0; i < u.dim(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

double pr(const StateVector& u, const StateVector& v) { return std::norm(inner(u, v)); }

StateVector tensor(const StateVector& u, const StateVector& v) {
  std::vector<Complex> a;
  a.reserve(u.dim() * v.dim());
  for (const auto& x : u.amplitudes()) {
    for (const auto& y : v.amplitudes()) a.push_back(x * y);
  }
  return StateVector::normalized(std::move(a));
}

StateVector z_plus() { return StateVector::basis(2, 0); }
StateVector z_minus() { return StateVector::basis(2, 1); }
StateVector x_plus() { return StateVector::normalized({1.0, 1.0}); }
StateVector x_minus() { return StateVector::normalized({1.0, -1.0}); }

StateVector singlet() {
  const double r = 1.0 / std::sqrt(2.0);
  return StateVector::normalized({0.0, r, -r, 0.0});
}

}  // namespace nonindiv::quantum
