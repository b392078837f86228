#pragma once

#include <cstdint>

namespace nonindiv::quantum {

enum class Statistics { Individuals, NonIndividuals };

const char* statistics_name(Statistics s) noexcept;

/// Ways to place n particles in k single-particle states.
/// Individuals: k^n. NonIndividuals: C(n + k - 1, n).
/// Throws InvalidArgument for k == 0 and Overflow past 2^64 - 1.
std::uint64_t count_configurations(std::uint64_t n, std::uint64_t k, Statistics mode);

}  // namespace nonindiv::quantum
