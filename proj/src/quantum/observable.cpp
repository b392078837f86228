#include "nonindiv/quantum/observable.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "nonindiv/error.hpp"
#include "nonindiv/simd/kernels.hpp"

namespace nonindiv::quantum {

namespace {

std::vector<Complex> outer_sum(const std::vector<double>& lambda, const std::vector<StateVector>& vecs) {
  const std::size_t d = lambda.size();
  std::vector<Complex> m(d * d);
  for (std::size_t k = 0; k < d; ++k) {
    const auto& s = vecs[k].amplitudes();
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) m[r * d + c] += lambda[k] * s[r] * std::conj(s[c]);
    }
  }
  return m;
}

}  // namespace

Observable::Observable(std::string name, std::vector<Complex> matrix, std::vector<double> eigenvalues,
                       std::vector<StateVector> eigenvectors)
    : name_(std::move(name)),
      matrix_(std::move(matrix)),
      eigenvalues_(std::move(eigenvalues)),
      eigenvectors_(std::move(eigenvectors)) {
  const std::size_t d = eigenvalues_.size();
  if (d == 0 || eigenvectors_.size() != d || matrix_.size() != d * d) {
    throw InvalidArgument("observable needs dim eigenpairs and a dim x dim matrix");
  }
  for (const auto& v : eigenvectors_) {
    if (v.dim() != d) throw DimensionMismatch("eigenvector dimension differs from the matrix");
  }
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      if (std::abs(matrix_[r * d + c] - std::conj(matrix_[c * d + r])) > kHermitianTol) {
        throw InvalidArgument("observable matrix is not Hermitian");
      }
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Complex g = inner(eigenvectors_[i], eigenvectors_[j]);
      if (std::abs(g - (i == j ? 1.0 : 0.0)) > kOrthonormalTol) {
        throw InvalidArgument("declared eigenbasis is not orthonormal");
      }
    }
    const auto& s = eigenvectors_[i].amplitudes();
    for (std::size_t r = 0; r < d; ++r) {
      Complex ms{};
      for (std::size_t c = 0; c < d; ++c) ms += matrix_[r * d + c] * s[c];
      if (std::abs(ms - eigenvalues_[i] * s[r]) > kOrthonormalTol) {
        throw InvalidArgument("declared eigenpair does not satisfy M s = lambda s");
      }
    }
  }
  rows_.reserve(d * d);
  for (const auto& v : eigenvectors_) rows_.insert(rows_.end(), v.amplitudes().begin(), v.amplitudes().end());
}

Observable Observable::from_eigenbasis(std::string name, std::vector<double> eigenvalues,
                                       std::vector<StateVector> eigenvectors) {
  if (eigenvalues.size() != eigenvectors.size()) throw InvalidArgument("eigenpair count mismatch");
  for (const auto& v : eigenvectors) {
    if (v.dim() != eigenvalues.size()) throw DimensionMismatch("eigenvector dimension mismatch");
  }
  auto m = outer_sum(eigenvalues, eigenvectors);
  // Exact Hermitian symmetry: average with the conjugate transpose.
  const std::size_t d = eigenvalues.size();
  for (std::size_t r = 0; r < d; ++r) {
    m[r * d + r] = m[r * d + r].real();
    for (std::size_t c = r + 1; c < d; ++c) {
      const Complex avg = 0.5 * (m[r * d + c] + std::conj(m[c * d + r]));
      m[r * d + c] = avg;
      m[c * d + r] = std::conj(avg);
    }
  }
  return Observable(std::move(name), std::move(m), std::move(eigenvalues), std::move(eigenvectors));
}

std::vector<double> born_probabilities(const Observable& o, const StateVector& u) {
  if (u.dim() != o.dim()) throw DimensionMismatch("state and observable dimensions differ");
  std::vector<double> p(o.dim());
  simd::overlap_probabilities(o.basis_rows(), u.amplitudes(), p);
  return p;
}

MeasurementRecord measure(const Observable& o, const StateVector& u, Rng& rng) {
  const std::vector<double> p = born_probabilities(o, u);
  double total = 0.0;
  for (double x : p) total += x;
  const double draw = uniform01(rng) * total;
  std::size_t pick = p.size();
  double acc = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    acc += p[k];
    if (draw < acc) {
      pick = k;
      break;
    }
  }
  if (pick == p.size()) {
    // rounding pushed the draw past the last bin: take the last nonzero one
    for (std::size_t k = p.size(); k-- > 0;) {
      if (p[k] > 0.0) {
        pick = k;
        break;
      }
    }
  }
  return {o.name(), pick, o.eigenvalues()[pick], o.eigenvectors()[pick], p[pick]};
}

StateVector evolve(const Observable& ham, const StateVector& u, double dt) {
  if (u.dim() != ham.dim()) throw DimensionMismatch("state and Hamiltonian dimensions differ");
  std::vector<Complex> out(u.dim());
  for (std::size_t k = 0; k < ham.dim(); ++k) {
    const StateVector& s = ham.eigenvectors()[k];
    const Complex c = std::polar(1.0, -ham.eigenvalues()[k] * dt) * inner(s, u);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * s[i];
  }
  return StateVector::normalized(std::move(out));
}

Direction Direction::spherical(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

namespace {

constexpr double kUnitTol = 1e-9;

std::pair<StateVector, StateVector> spin_eigenvectors(const Direction& n) {
  const double len = std::sqrt(n.x * n.x + n.y * n.y + n.z * n.z);
  if (!(std::abs(len - 1.0) <= kUnitTol)) throw NonUnitDirection("spin direction must be a unit vector");
  const double theta = std::acos(std::clamp(n.z / len, -1.0, 1.0));
  const double phi = std::atan2(n.y, n.x);
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  return {StateVector::normalized({c, std::polar(s, phi)}),
          StateVector::normalized({-std::polar(s, -phi), c})};
}

}  // namespace

Observable spin_observable(const Direction& n) {
  auto [plus, minus] = spin_eigenvectors(n);
  const double len = std::sqrt(n.x * n.x + n.y * n.y + n.z * n.z);
  const double x = n.x / len, y = n.y / len, z = n.z / len;
  char name[96];
  std::snprintf(name, sizeof name, "spin(%.12g,%.12g,%.12g)", n.x, n.y, n.z);
  return Observable(name, {z, Complex(x, -y), Complex(x, y), -z}, {1.0, -1.0}, {plus, minus});
}

namespace {

std::vector<StateVector> product_basis(const Direction& a, const Direction& b) {
  auto [ap, am] = spin_eigenvectors(a);
  auto [bp, bm] = spin_eigenvectors(b);
  return {tensor(ap, bp), tensor(ap, bm), tensor(am, bp), tensor(am, bm)};
}

}  // namespace

JointSpinMeasurement::JointSpinMeasurement(const Direction& a, const Direction& b)
    : first_(Observable::from_eigenbasis("a.sigma x I", {1, 1, -1, -1}, product_basis(a, b))),
      second_(Observable::from_eigenbasis("I x b.sigma", {1, -1, 1, -1}, product_basis(a, b))) {}

std::pair<int, int> JointSpinMeasurement::operator()(const StateVector& psi, Rng& rng) const {
  if (psi.dim() != 4) throw DimensionMismatch("joint spin measurement needs a 4-dimensional state");
  const MeasurementRecord ra = measure(first_, psi, rng);
  const MeasurementRecord rb = measure(second_, ra.post_state, rng);
  return {ra.outcome > 0 ? 1 : -1, rb.outcome > 0 ? 1 : -1};
}

std::pair<int, int> joint_spin_measure(const StateVector& psi, const Direction& a, const Direction& b,
                                       Rng& rng) {
  if (psi.dim() != 4) throw DimensionMismatch("joint spin measurement needs a 4-dimensional state");
  return JointSpinMeasurement(a, b)(psi, rng);
}

}  // namespace nonindiv::quantum
