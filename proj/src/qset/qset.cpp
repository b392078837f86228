#include "nonindiv/qset/qset.hpp"

#include <algorithm>
#include <string>

#include "nonindiv/error.hpp"
#include "nonindiv/qset/ops.hpp"

namespace nonindiv::qset {

bool QSet::is_set() const {
  if (!micro_.empty()) return false;
  return std::all_of(subs_.begin(), subs_.end(),
                     [](const SubClass& s) { return s.representative.is_set(); });
}

std::size_t QSet::depth() const {
  std::size_t d = 0;
  for (const auto& s : subs_) d = std::max(d, 1 + s.representative.depth());
  return d;
}

QSetBuilder& QSetBuilder::add_micro(const Species& s, std::uint64_t count) {
  if (count == 0) return *this;
  auto& slot = q_.micro_[s];
  slot = slot + QuasiCardinal(count);
  return *this;
}

QSetBuilder& QSetBuilder::add_macro(const MacroId& id) {
  q_.macro_.insert(id);
  return *this;
}

QSetBuilder& QSetBuilder::add_sub(const QSet& rep, std::uint64_t multiplicity) {
  if (multiplicity == 0) return *this;
  const bool set_like = rep.is_set();
  if (set_like && multiplicity > 1) {
    throw InvalidArgument("a collection without m-atoms can occur only once in a quasi-set");
  }
  for (auto& sub : q_.subs_) {
    if (!weak_ext_indist(sub.representative, rep)) continue;
    if (set_like) return *this;
    const std::uint64_t total = sub.multiplicity.value() + multiplicity;
    if (total > cap_) {
      throw CapacityExceeded("nested multiplicity " + std::to_string(total) + " exceeds cap " +
                             std::to_string(cap_));
    }
    sub.multiplicity = QuasiCardinal(total);
    return *this;
  }
  if (multiplicity > cap_) {
    throw CapacityExceeded("nested multiplicity " + std::to_string(multiplicity) +
                           " exceeds cap " + std::to_string(cap_));
  }
  q_.subs_.push_back(SubClass{rep, QuasiCardinal(multiplicity)});
  return *this;
}

QSetBuilder& QSetBuilder::add(const Element& e, std::uint64_t count) {
  if (count == 0) return *this;
  if (const auto* m = std::get_if<MicroAtom>(&e)) return add_micro(m->species, count);
  if (const auto* m = std::get_if<MacroAtom>(&e)) return add_macro(m->id);
  const auto& c = std::get<Collection>(e);
  return add_sub(c.q, c.q.is_set() ? 1 : count);
}

}  // namespace nonindiv::qset
