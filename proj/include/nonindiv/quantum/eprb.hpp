#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nonindiv/quantum/observable.hpp"

namespace nonindiv::quantum {

struct EprbCounts {
  std::uint64_t pp = 0, pm = 0, mp = 0, mm = 0;
  std::uint64_t total() const noexcept { return pp + pm + mp + mm; }
  void add(int a, int b) noexcept;
  EprbCounts& operator+=(const EprbCounts& o) noexcept;
  bool operator==(const EprbCounts&) const = default;
};

struct EprbResult {
  EprbCounts counts;
  double correlation = 0.0;     // mean of outcome_a * outcome_b
  double standard_error = 0.0;  // sqrt((1 - E^2) / N)
};

/// Trial i draws from Rng(seed_split(seed, i)) on the singlet.
std::pair<int, int> eprb_trial(const Direction& a, const Direction& b, std::uint64_t seed, std::uint64_t index);

/// threads == 0 picks hardware_concurrency. Result does not depend on threads.
/// Throws InvalidArgument for trials == 0.
EprbResult eprb_statistics(const Direction& a, const Direction& b, std::uint64_t trials, std::uint64_t seed,
                           unsigned threads = 0);

/// Per-trial outcomes in trial order.
std::vector<std::pair<int, int>> eprb_outcomes(const Direction& a, const Direction& b, std::uint64_t trials,
                                               std::uint64_t seed, unsigned threads = 0);

EprbResult summarize(const EprbCounts& counts);

}  // namespace nonindiv::quantum
