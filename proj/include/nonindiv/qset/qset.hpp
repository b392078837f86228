#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace nonindiv::qset {

/// One indistinguishability class of micro-atoms. Two m-atoms are ≡ iff
/// they carry the same Species; nothing finer is observable.
class Species {
 public:
  explicit Species(std::string label) : label_(std::move(label)) {}
  const std::string& label() const noexcept { return label_; }
  auto operator<=>(const Species&) const = default;

 private:
  std::string label_;
};

/// Identifier of a macro-atom. Macro-atoms behave as classical urelements.
class MacroId {
 public:
  explicit MacroId(std::string id) : id_(std::move(id)) {}
  const std::string& str() const noexcept { return id_; }
  auto operator<=>(const MacroId&) const = default;

 private:
  std::string id_;
};

class QuasiCardinal {
 public:
  constexpr QuasiCardinal() = default;
  constexpr explicit QuasiCardinal(std::uint64_t v) : value_(v) {}
  constexpr std::uint64_t value() const noexcept { return value_; }
  constexpr auto operator<=>(const QuasiCardinal&) const = default;
  constexpr QuasiCardinal operator+(QuasiCardinal o) const { return QuasiCardinal(value_ + o.value_); }

 private:
  std::uint64_t value_ = 0;
};

struct SubClass;

inline constexpr std::uint64_t kDefaultMultiplicityCap = 64;

/// Finite quasi-set.
///
/// Micro-atoms are held only as (Species, count): there is no per-atom
/// handle. Macro-atoms are a plain set of ids. Nested quasi-sets are stored
/// as one representative per ≡-class together with the number of
/// indistinguishable copies; representatives are pairwise non-≡.
///
/// Values are immutable; use QSetBuilder to make one.
class QSet {
 public:
  QSet() = default;

  const std::map<Species, QuasiCardinal>& micro() const noexcept { return micro_; }
  const std::set<MacroId>& macro() const noexcept { return macro_; }
  const std::vector<SubClass>& subs() const noexcept { return subs_; }

  bool empty() const noexcept { return micro_.empty() && macro_.empty() && subs_.empty(); }
  /// Only m-atoms as elements.
  bool is_pure() const noexcept { return macro_.empty() && subs_.empty(); }
  /// Z(x): no m-atom anywhere in the transitive closure.
  bool is_set() const;
  /// 0 for a quasi-set without nested collections.
  std::size_t depth() const;

 private:
  friend class QSetBuilder;
  std::map<Species, QuasiCardinal> micro_;
  std::set<MacroId> macro_;
  std::vector<SubClass> subs_;
};

struct SubClass {
  QSet representative;
  QuasiCardinal multiplicity;
};

struct MicroAtom {
  Species species;
};
struct MacroAtom {
  MacroId id;
};
struct Collection {
  QSet q;
};

/// Anything that can be an element of a quasi-set.
using Element = std::variant<MicroAtom, MacroAtom, Collection>;

inline Element micro(std::string species) { return MicroAtom{Species(std::move(species))}; }
inline Element macro(std::string id) { return MacroAtom{MacroId(std::move(id))}; }
inline Element collection(QSet q) { return Collection{std::move(q)}; }

/// Accumulates elements and produces a normalized QSet.
///
/// Adding a collection merges it into an existing ≡-class when there is one.
/// Collections that are sets (no m-atoms) obey set semantics: adding one twice
/// leaves a single copy, and an explicit multiplicity above 1 is rejected.
/// Multiplicities of nested classes are capped (default 64).
class QSetBuilder {
 public:
  explicit QSetBuilder(std::uint64_t multiplicity_cap = kDefaultMultiplicityCap)
      : cap_(multiplicity_cap) {}
  explicit QSetBuilder(QSet start, std::uint64_t multiplicity_cap = kDefaultMultiplicityCap)
      : cap_(multiplicity_cap), q_(std::move(start)) {}

  QSetBuilder& add_micro(const Species& s, std::uint64_t count = 1);
  QSetBuilder& add_macro(const MacroId& id);
  QSetBuilder& add_sub(const QSet& rep, std::uint64_t multiplicity = 1);
  /// Adds `count` copies of an element (macro-atoms and sets stay single).
  QSetBuilder& add(const Element& e, std::uint64_t count = 1);

  QSet build() const& { return q_; }
  QSet build() && { return std::move(q_); }

 private:
  std::uint64_t cap_;
  QSet q_;
};

}  // namespace nonindiv::qset
