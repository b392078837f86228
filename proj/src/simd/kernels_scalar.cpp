#include <cmath>

#include "nonindiv/simd/kernels.hpp"

namespace nonindiv::simd::scalar {

void gravity_accelerations(BodiesView b, double gamma, AccelOut out) {
  const std::size_t n = b.x.size();
  for (std::size_t i = 0; i < n; ++i) {
    double ax = 0.0, ay = 0.0, az = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double dx = b.x[j] - b.x[i];
      const double dy = b.y[j] - b.y[i];
      const double dz = b.z[j] - b.z[i];
      const double r2 = dx * dx + dy * dy + dz * dz;
      const double s = b.mass[j] / (r2 * std::sqrt(r2));
      ax += s * dx;
      ay += s * dy;
      az += s * dz;
    }
    out.x[i] = gamma * ax;
    out.y[i] = gamma * ay;
    out.z[i] = gamma * az;
  }
}

void overlap_probabilities(std::span<const std::complex<double>> basis,
                           std::span<const std::complex<double>> u, std::span<double> out) {
  const std::size_t dim = u.size();
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < dim; ++i) acc += std::conj(basis[k * dim + i]) * u[i];
    out[k] = std::norm(acc);
  }
}

}  // namespace nonindiv::simd::scalar
