#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace nonindiv::quantum {

using Complex = std::complex<double>;

inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kOrthonormalTol = 1e-10;

/// Unit vector in C^dim.
class StateVector {
 public:
  /// Throws InvalidArgument for an empty vector or one whose norm differs
  /// from 1 by more than 1e-12.
  explicit StateVector(std::vector<Complex> amplitudes);
  /// Rescales to unit norm. Throws InvalidArgument for the zero vector.
  static StateVector normalized(std::vector<Complex> amplitudes);
  static StateVector basis(std::size_t dim, std::size_t k);

  std::size_t dim() const noexcept { return amps_.size(); }
  const std::vector<Complex>& amplitudes() const noexcept { return amps_; }
  const Complex& operator[](std::size_t k) const { return amps_.at(k); }
  double norm() const noexcept;

 private:
  struct Unchecked {};
  StateVector(std::vector<Complex> amplitudes, Unchecked) : amps_(std::move(amplitudes)) {}
  std::vector<Complex> amps_;
};

/// <u|v>, antilinear in u. Throws DimensionMismatch.
Complex inner(const StateVector& u, const StateVector& v);
/// |<u|v>|^2. Throws DimensionMismatch.
double pr(const StateVector& u, const StateVector& v);
/// u ⊗ v in the ordering (i, j) -> i * v.dim() + j.
StateVector tensor(const StateVector& u, const StateVector& v);

/// Spin-1/2 kets in the z basis {|+>, |->}.
StateVector z_plus();
StateVector z_minus();
StateVector x_plus();
StateVector x_minus();

/// (|+-> - |-+>)/sqrt 2 in the ordered basis {|++>, |+->, |-+>, |-->}.
StateVector singlet();

}  // namespace nonindiv::quantum
