#include "nonindiv/quantum/counting.hpp"

#include <algorithm>
#include <limits>

#include "nonindiv/error.hpp"

namespace nonindiv::quantum {

const char* statistics_name(Statistics s) noexcept {
  return s == Statistics::Individuals ? "individuals" : "non-individuals";
}

std::uint64_t count_configurations(std::uint64_t n, std::uint64_t k, Statistics mode) {
  if (k == 0) throw InvalidArgument("need at least one state");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (mode == Statistics::Individuals) {
    if (k == 1) return 1;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
      if (__builtin_mul_overflow(r, k, &r)) throw Overflow("k^n exceeds 64 bits");
    }
    return r;
  }
  // C(m, j) with m = n + k - 1 and j = min(n, k - 1), built up as C(m - j + i, i).
  if (n > kMax - (k - 1)) throw Overflow("n + k - 1 exceeds 64 bits");
  const std::uint64_t m = n + k - 1;
  const std::uint64_t j = std::min(n, k - 1);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= j; ++i) {
    r = r * (m - j + i) / i;  // exact: r * (...) = i * C(m - j + i, i)
    if (r > kMax) throw Overflow("C(n + k - 1, n) exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace nonindiv::quantum
