#include "nonindiv/qset/ops.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "nonindiv/error.hpp"

namespace nonindiv::qset {

namespace {

// Structural comparison shared by ≡ and =_E on collections; `same_class`
// decides when two nested representatives count as the same element.
template <typename SameClass>
bool same_quotient(const QSet& x, const QSet& y, SameClass same_class) {
  if (x.micro() != y.micro() || x.macro() != y.macro()) return false;
  if (x.subs().size() != y.subs().size()) return false;
  for (const auto& sx : x.subs()) {
    const auto it = std::find_if(y.subs().begin(), y.subs().end(), [&](const SubClass& sy) {
      return same_class(sx.representative, sy.representative);
    });
    if (it == y.subs().end() || it->multiplicity != sx.multiplicity) return false;
  }
  return true;
}

const SubClass* find_class(const QSet& q, const QSet& rep) {
  for (const auto& s : q.subs()) {
    if (weak_ext_indist(s.representative, rep)) return &s;
  }
  return nullptr;
}

void add_class_of(QSetBuilder& out, const Element& e, const QSet& universe) {
  if (const auto* m = std::get_if<MicroAtom>(&e)) {
    const auto it = universe.micro().find(m->species);
    if (it != universe.micro().end()) out.add_micro(it->first, it->second.value());
  } else if (const auto* m = std::get_if<MacroAtom>(&e)) {
    if (universe.macro().count(m->id) != 0) out.add_macro(m->id);
  } else {
    const auto& c = std::get<Collection>(e);
    if (const auto* s = find_class(universe, c.q)) {
      out.add_sub(s->representative, s->multiplicity.value());
    }
  }
}

}  // namespace

bool weak_ext_indist(const QSet& x, const QSet& y) {
  return same_quotient(x, y, [](const QSet& a, const QSet& b) { return weak_ext_indist(a, b); });
}

bool indist(const Element& a, const Element& b) {
  if (a.index() != b.index()) return false;
  if (const auto* m = std::get_if<MicroAtom>(&a)) return m->species == std::get<MicroAtom>(b).species;
  if (const auto* m = std::get_if<MacroAtom>(&a)) return m->id == std::get<MacroAtom>(b).id;
  return weak_ext_indist(std::get<Collection>(a).q, std::get<Collection>(b).q);
}

bool ext_eq(const Element& a, const Element& b) {
  if (std::holds_alternative<MicroAtom>(a) || std::holds_alternative<MicroAtom>(b)) {
    throw IllFormed("x = y is not a formula when x or y is an m-atom");
  }
  if (a.index() != b.index()) return false;
  if (const auto* m = std::get_if<MacroAtom>(&a)) return m->id == std::get<MacroAtom>(b).id;
  struct Same {
    bool operator()(const QSet& x, const QSet& y) const {
      return same_quotient(x, y, Same{});
    }
  };
  return Same{}(std::get<Collection>(a).q, std::get<Collection>(b).q);
}

QuasiCardinal qc(const QSet& q) {
  std::uint64_t total = q.macro().size();
  for (const auto& [s, n] : q.micro()) total += n.value();
  for (const auto& s : q.subs()) total += s.multiplicity.value();
  return QuasiCardinal(total);
}

QuasiCardinal count_indist(const QSet& q, const Element& e) {
  if (const auto* m = std::get_if<MicroAtom>(&e)) {
    const auto it = q.micro().find(m->species);
    return it == q.micro().end() ? QuasiCardinal(0) : it->second;
  }
  if (const auto* m = std::get_if<MacroAtom>(&e)) return QuasiCardinal(q.macro().count(m->id));
  const auto* s = find_class(q, std::get<Collection>(e).q);
  return s == nullptr ? QuasiCardinal(0) : s->multiplicity;
}

QSet weak_pair(const Element& x, const Element& y, const QSet& universe) {
  QSetBuilder out;
  add_class_of(out, x, universe);
  if (!indist(x, y)) add_class_of(out, y, universe);
  return std::move(out).build();
}

QSet n_singleton(const Element& x, QuasiCardinal n, const QSet& universe) {
  const auto* m = std::get_if<MicroAtom>(&x);
  if (m == nullptr) throw InvalidArgument("n-singletons are formed from m-atoms");
  const QuasiCardinal available = count_indist(universe, x);
  if (n > available) {
    throw CapacityExceeded("requested " + std::to_string(n.value()) + " elements of [" +
                           m->species.label() + "] but qc([x]) = " +
                           std::to_string(available.value()));
  }
  return QSetBuilder().add_micro(m->species, n.value()).build();
}

QSet sub_qset_with_qc(const QSet& q, QuasiCardinal beta) {
  const QuasiCardinal total = qc(q);
  if (beta > total) {
    throw CapacityExceeded("no sub-quasi-set with qc " + std::to_string(beta.value()) +
                           " inside one with qc " + std::to_string(total.value()));
  }
  std::uint64_t need = beta.value();
  QSetBuilder out;
  for (const auto& [s, n] : q.micro()) {
    if (need == 0) break;
    const std::uint64_t take = std::min(need, n.value());
    out.add_micro(s, take);
    need -= take;
  }
  for (const auto& id : q.macro()) {
    if (need == 0) break;
    out.add_macro(id);
    --need;
  }
  for (const auto& s : q.subs()) {
    if (need == 0) break;
    const std::uint64_t take = std::min(need, s.multiplicity.value());
    out.add_sub(s.representative, take);
    need -= take;
  }
  return std::move(out).build();
}

QuasiCardinal power_qc(const QSet& q) {
  const std::uint64_t n = qc(q).value();
  if (n >= 64) throw Overflow("2^" + std::to_string(n) + " does not fit in 64 bits");
  return QuasiCardinal(std::uint64_t{1} << n);
}

std::vector<QSet> enumerate_sub_classes(const QSet& q) {
  const std::uint64_t n = qc(q).value();
  if (n > kMaxEnumerableQc) {
    throw TooLarge("enumeration limited to qc <= " + std::to_string(kMaxEnumerableQc) +
                   ", got " + std::to_string(n));
  }
  // One slot per ≡-class; a sub-class is fixed by how many of each it takes.
  const auto classes = quotient(q);
  std::vector<std::uint64_t> take(classes.size(), 0);
  std::vector<QSet> out;
  while (true) {
    QSetBuilder b;
    for (std::size_t i = 0; i < classes.size(); ++i) b.add(classes[i].representative, take[i]);
    out.push_back(std::move(b).build());
    std::size_t i = 0;
    for (; i < classes.size(); ++i) {
      if (take[i] < classes[i].count.value()) {
        ++take[i];
        break;
      }
      take[i] = 0;
    }
    if (i == classes.size()) break;
  }
  return out;
}

QSet separation(const QSet& q, const Predicate& p) {
  QSetBuilder out;
  for (const auto& [s, n] : q.micro()) {
    if (p(MicroAtom{s})) out.add_micro(s, n.value());
  }
  for (const auto& id : q.macro()) {
    if (p(MacroAtom{id})) out.add_macro(id);
  }
  for (const auto& s : q.subs()) {
    if (p(Collection{s.representative})) out.add_sub(s.representative, s.multiplicity.value());
  }
  return std::move(out).build();
}

bool similar(const QSet& x, const QSet& y) {
  if (!x.is_pure() || !y.is_pure()) throw NotPure("Sim is defined on pure quasi-sets");
  if (x.empty() || y.empty()) return true;
  std::set<Species> seen;
  for (const auto& [s, n] : x.micro()) seen.insert(s);
  for (const auto& [s, n] : y.micro()) seen.insert(s);
  return seen.size() == 1;
}

bool qsim(const QSet& x, const QSet& y) { return similar(x, y) && qc(x) == qc(y); }

std::vector<QuotientEntry> quotient(const QSet& q) {
  std::vector<QuotientEntry> out;
  out.reserve(q.micro().size() + q.macro().size() + q.subs().size());
  for (const auto& [s, n] : q.micro()) out.push_back({MicroAtom{s}, n});
  for (const auto& id : q.macro()) out.push_back({MacroAtom{id}, QuasiCardinal(1)});
  for (const auto& s : q.subs()) out.push_back({Collection{s.representative}, s.multiplicity});
  return out;
}

bool is_subqset(const QSet& y, const QSet& x) {
  for (const auto& [s, n] : y.micro()) {
    const auto it = x.micro().find(s);
    if (it == x.micro().end() || it->second < n) return false;
  }
  for (const auto& id : y.macro()) {
    if (x.macro().count(id) == 0) return false;
  }
  for (const auto& s : y.subs()) {
    const auto* c = find_class(x, s.representative);
    if (c == nullptr || c->multiplicity < s.multiplicity) return false;
  }
  return true;
}

}  // namespace nonindiv::qset
