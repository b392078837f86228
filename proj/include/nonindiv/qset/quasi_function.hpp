#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nonindiv/qset/qset.hpp"

namespace nonindiv::qset {

/// Finite mapping given by its graph. Well-formed only when it is
/// ≡-congruent: inputs that are ≡ must go to outputs that are ≡.
struct QuasiFunction {
  std::vector<std::pair<Element, Element>> pairs;
  std::optional<QSet> domain;
  std::optional<QSet> codomain;
};

struct QfVerdict {
  enum class Kind { Ok, Congruence, OutsideDomain, OutsideCodomain };
  Kind kind = Kind::Ok;
  /// Indices into `pairs`. For congruence violations both are set; for
  /// domain/codomain violations `first == second`.
  std::size_t first = 0;
  std::size_t second = 0;

  bool ok() const noexcept { return kind == Kind::Ok; }
  std::string describe() const;
};

QfVerdict validate_qf(const QuasiFunction& f);

}  // namespace nonindiv::qset
