#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "nonindiv/qset/qset.hpp"

namespace nonindiv::qset {

/// Closed predicate algebra for the Separation schema. None of the atoms
/// can tell two ≡ elements apart, so every Predicate is ≡-invariant.
class Predicate {
 public:
  static Predicate species_is(Species s);
  static Predicate macro_id_is(MacroId id);
  static Predicate is_collection();
  /// Atoms are not quasi-sets, so qc predicates are false on them.
  static Predicate qc_equals(std::uint64_t n);
  static Predicate qc_at_most(std::uint64_t n);
  static Predicate always();
  static Predicate never();

  friend Predicate operator&&(Predicate a, Predicate b);
  friend Predicate operator||(Predicate a, Predicate b);
  friend Predicate operator!(Predicate a);

  bool operator()(const Element& e) const;
  std::string to_string() const;

  struct Node;

 private:
  explicit Predicate(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace nonindiv::qset
