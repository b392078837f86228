#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nonindiv/quantum/state.hpp"
#include "nonindiv/random.hpp"

namespace nonindiv::quantum {

/// Hermitian operator together with a declared orthonormal eigenbasis. The
/// basis is data: for degenerate eigenvalues it fixes which post-measurement
/// states are possible.
class Observable {
 public:
  /// matrix is row-major dim x dim. Throws InvalidArgument unless matrix is
  /// Hermitian (1e-12), the eigenvectors are orthonormal (1e-10), and each
  /// satisfies M s = lambda s (1e-10).
  Observable(std::string name, std::vector<Complex> matrix, std::vector<double> eigenvalues,
             std::vector<StateVector> eigenvectors);
  /// Builds the matrix as sum_k lambda_k |s_k><s_k|.
  static Observable from_eigenbasis(std::string name, std::vector<double> eigenvalues,
                                    std::vector<StateVector> eigenvectors);

  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return eigenvalues_.size(); }
  const std::vector<Complex>& matrix() const noexcept { return matrix_; }
  const Complex& at(std::size_t r, std::size_t c) const { return matrix_.at(r * dim() + c); }
  const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }
  const std::vector<StateVector>& eigenvectors() const noexcept { return eigenvectors_; }
  /// Eigenvectors flattened row-major, as the overlap kernel expects.
  const std::vector<Complex>& basis_rows() const noexcept { return rows_; }

 private:
  std::string name_;
  std::vector<Complex> matrix_;
  std::vector<double> eigenvalues_;
  std::vector<StateVector> eigenvectors_;
  std::vector<Complex> rows_;
};

/// Pr(u, s_k) for every declared eigenvector s_k. Throws DimensionMismatch.
std::vector<double> born_probabilities(const Observable& o, const StateVector& u);

struct MeasurementRecord {
  std::string observable;
  std::size_t index = 0;  // position in the declared eigenbasis
  double outcome = 0.0;
  StateVector post_state = z_plus();
  double probability = 0.0;
};

/// Samples eigenvector k with probability Pr(u, s_k) from one uniform draw.
MeasurementRecord measure(const Observable& o, const StateVector& u, Rng& rng);

/// exp(-i H dt) u with hbar = 1, through H's eigendecomposition.
StateVector evolve(const Observable& ham, const StateVector& u, double dt);

struct Direction {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;
  /// (sin theta cos phi, sin theta sin phi, cos theta).
  static Direction spherical(double theta, double phi);
};

/// n·σ with eigenvalues +1, -1 and eigenvectors
/// (cos θ/2, e^{iφ} sin θ/2) and (-e^{-iφ} sin θ/2, cos θ/2).
/// Throws NonUnitDirection when |n| differs from 1 by more than 1e-9.
Observable spin_observable(const Direction& n);

/// The two lifted observables for one pair of directions, built once.
class JointSpinMeasurement {
 public:
  JointSpinMeasurement(const Direction& a, const Direction& b);
  /// Throws DimensionMismatch unless psi has dim 4.
  std::pair<int, int> operator()(const StateVector& psi, Rng& rng) const;
  const Observable& first() const noexcept { return first_; }
  const Observable& second() const noexcept { return second_; }

 private:
  Observable first_;
  Observable second_;
};

/// Measures (a·σ)⊗I, then I⊗(b·σ) on the collapsed state. Both lifted
/// observables declare the product eigenbasis {s_a± ⊗ s_b±}.
std::pair<int, int> joint_spin_measure(const StateVector& psi, const Direction& a,
                                       const Direction& b, Rng& rng);

}  // namespace nonindiv::quantum
