// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include <cmath>

#include "nonindiv/simd/kernels.hpp"

namespace nonindiv::simd::avx2 {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

void gravity_accelerations(BodiesView b, double gamma, AccelOut out) {
  const std::size_t n = b.x.size();
  const std::size_t body = n - n % 4;
  const __m256d lane = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
  const __m256d one = _mm256_set1_pd(1.0);
  for (std::size_t i = 0; i < n; ++i) {
    const __m256d xi = _mm256_set1_pd(b.x[i]);
    const __m256d yi = _mm256_set1_pd(b.y[i]);
    const __m256d zi = _mm256_set1_pd(b.z[i]);
    const __m256d self = _mm256_set1_pd(static_cast<double>(i));
    __m256d ax = _mm256_setzero_pd();
    __m256d ay = _mm256_setzero_pd();
    __m256d az = _mm256_setzero_pd();
    for (std::size_t j = 0; j < body; j += 4) {
      const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(&b.x[j]), xi);
      const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(&b.y[j]), yi);
      const __m256d dz = _mm256_sub_pd(_mm256_loadu_pd(&b.z[j]), zi);
      const __m256d idx = _mm256_add_pd(_mm256_set1_pd(static_cast<double>(j)), lane);
      const __m256d is_self = _mm256_cmp_pd(idx, self, _CMP_EQ_OQ);
      __m256d r2 = _mm256_fmadd_pd(dx, dx, _mm256_fmadd_pd(dy, dy, _mm256_mul_pd(dz, dz)));
      r2 = _mm256_blendv_pd(r2, one, is_self);
      const __m256d m = _mm256_andnot_pd(is_self, _mm256_loadu_pd(&b.mass[j]));
      const __m256d s = _mm256_div_pd(m, _mm256_mul_pd(r2, _mm256_sqrt_pd(r2)));
      ax = _mm256_fmadd_pd(s, dx, ax);
      ay = _mm256_fmadd_pd(s, dy, ay);
      az = _mm256_fmadd_pd(s, dz, az);
    }
    double sx = hsum(ax), sy = hsum(ay), sz = hsum(az);
    for (std::size_t j = body; j < n; ++j) {
      if (j == i) continue;
      const double dx = b.x[j] - b.x[i];
      const double dy = b.y[j] - b.y[i];
      const double dz = b.z[j] - b.z[i];
      const double r2 = dx * dx + dy * dy + dz * dz;
      const double s = b.mass[j] / (r2 * std::sqrt(r2));
      sx += s * dx;
      sy += s * dy;
      sz += s * dz;
    }
    out.x[i] = gamma * sx;
    out.y[i] = gamma * sy;
    out.z[i] = gamma * sz;
  }
}

void overlap_probabilities(std::span<const std::complex<double>> basis,
                           std::span<const std::complex<double>> u, std::span<double> out) {
  const std::size_t dim = u.size();
  const std::size_t body = dim - dim % 2;
  // std::complex<double> is layout-compatible with double[2].
  const auto* uu = reinterpret_cast<const double*>(u.data());
  const __m256d odd_sign = _mm256_set_pd(-1.0, 1.0, -1.0, 1.0);
  for (std::size_t k = 0; k < out.size(); ++k) {
    const auto* row = reinterpret_cast<const double*>(basis.data() + k * dim);
    __m256d re = _mm256_setzero_pd();
    __m256d im = _mm256_setzero_pd();
    for (std::size_t i = 0; i < body; i += 2) {
      const __m256d bv = _mm256_loadu_pd(row + 2 * i);
      const __m256d uv = _mm256_loadu_pd(uu + 2 * i);
      // conj(b) u: re = br ur + bi ui, im = br ui - bi ur
      re = _mm256_fmadd_pd(bv, uv, re);
      const __m256d swapped = _mm256_permute_pd(uv, 0b0101);
      im = _mm256_fmadd_pd(_mm256_mul_pd(bv, odd_sign), swapped, im);
    }
    std::complex<double> acc{hsum(re), hsum(im)};
    for (std::size_t i = body; i < dim; ++i) acc += std::conj(basis[k * dim + i]) * u[i];
    out[k] = std::norm(acc);
  }
}

}  // namespace nonindiv::simd::avx2
