#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nonindiv {

/// Outcome of one named check run over many cases. Keeps the first witness.
struct CheckRecord {
  CheckRecord() = default;
  explicit CheckRecord(std::string n) : name(std::move(n)) {}

  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  /// Check-specific figure of merit (max residual, estimate, count, ...).
  double metric = 0.0;
  std::string witness;

  bool pass() const noexcept { return failures == 0; }

  void record(bool ok, const std::string& what = {}) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) witness = what;
  }

  /// Like record, but the witness text is only built on the first failure.
  template <typename Describe>
  void check(bool ok, Describe&& describe) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) witness = describe();
  }
};

using CheckList = std::vector<CheckRecord>;

inline bool all_pass(const CheckList& checks) {
  for (const auto& c : checks) {
    if (!c.pass()) return false;
  }
  return true;
}

}  // namespace nonindiv
