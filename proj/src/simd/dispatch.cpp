#include <atomic>
#include <cstdlib>
#include <cstring>

#include "nonindiv/error.hpp"
#include "nonindiv/simd/kernels.hpp"

namespace nonindiv::simd {

namespace {

Isa initial_isa() noexcept {
  if (const char* env = std::getenv("NONINDIV_SIMD"); env != nullptr && std::strcmp(env, "scalar") == 0) {
    return Isa::Scalar;
  }
  return detected_isa();
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

const char* isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

Isa detected_isa() noexcept {
#ifdef NONINDIV_HAVE_AVX2_KERNELS
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) {
    throw InvalidArgument("AVX2 kernels are not available on this CPU/build");
  }
  current().store(isa, std::memory_order_relaxed);
}

void gravity_accelerations(BodiesView bodies, double gamma, AccelOut out) {
#ifdef NONINDIV_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::Avx2) return avx2::gravity_accelerations(bodies, gamma, out);
#endif
  scalar::gravity_accelerations(bodies, gamma, out);
}

void overlap_probabilities(std::span<const std::complex<double>> basis,
                           std::span<const std::complex<double>> u, std::span<double> out) {
#ifdef NONINDIV_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::Avx2) return avx2::overlap_probabilities(basis, u, out);
#endif
  scalar::overlap_probabilities(basis, u, out);
}

}  // namespace nonindiv::simd
