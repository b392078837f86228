#pragma once

#include <cstdint>
#include <random>

namespace nonindiv {

using Rng = std::mt19937_64;

/// Per-trial seed: SplitMix64 finalizer applied to master + golden * (index + 1).
/// The finalizer is a bijection on 64-bit words and the counter never
/// repeats for distinct indices, so sub-seeds of one master never collide.
constexpr std::uint64_t seed_split(std::uint64_t master, std::uint64_t index) noexcept {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Uniform double in [0, 1) from the top 53 bits. Fixed here rather than via
/// std::uniform_real_distribution, whose output is library-specific.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace nonindiv
