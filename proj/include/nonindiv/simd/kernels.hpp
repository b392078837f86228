#pragma once

#include <complex>
#include <cstddef>
#include <span>

// Data-parallel inner loops. Each kernel has a scalar reference
// implementation and, on x86-64, an AVX2/FMA variant. The dispatching entry
// points pick the variant once at runtime; results agree with the scalar
// reference to rounding (summation order differs), see tests/test_simd.cpp.
//
// Setting NONINDIV_SIMD=scalar in the environment forces the reference path.

namespace nonindiv::simd {

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa) noexcept;
/// Best variant this CPU and build support.
Isa detected_isa() noexcept;
/// Variant used by the dispatching entry points.
Isa active_isa() noexcept;
/// Overrides the dispatch choice. Throws InvalidArgument if unsupported.
void force_isa(Isa isa);

/// a_i = gamma * sum_{j != i} m_j (s_j - s_i) / |s_j - s_i|^3, for bodies
/// given as structure-of-arrays. Coincident bodies must be rejected by the
/// caller; the i == j term is skipped.
struct BodiesView {
  std::span<const double> x, y, z, mass;
};
struct AccelOut {
  std::span<double> x, y, z;
};

void gravity_accelerations(BodiesView bodies, double gamma, AccelOut out);

/// out_k = |<basis_k | u>|^2 for `basis` stored row-major as
/// out.size() rows of u.size() complex entries.
void overlap_probabilities(std::span<const std::complex<double>> basis,
                           std::span<const std::complex<double>> u, std::span<double> out);

namespace scalar {
void gravity_accelerations(BodiesView bodies, double gamma, AccelOut out);
void overlap_probabilities(std::span<const std::complex<double>> basis,
                           std::span<const std::complex<double>> u, std::span<double> out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define NONINDIV_HAVE_AVX2_KERNELS 1
namespace avx2 {
void gravity_accelerations(BodiesView bodies, double gamma, AccelOut out);
void overlap_probabilities(std::span<const std::complex<double>> basis,
                           std::span<const std::complex<double>> u, std::span<double> out);
}  // namespace avx2
#endif

}  // namespace nonindiv::simd
