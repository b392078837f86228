#include "nonindiv/qset/predicate.hpp"

#include "nonindiv/qset/ops.hpp"

namespace nonindiv::qset {

struct Predicate::Node {
  enum class Kind { SpeciesIs, MacroIdIs, IsCollection, QcEquals, QcAtMost, True, False, And, Or, Not };
  Kind kind;
  std::string label;
  std::uint64_t n = 0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using Node = Predicate::Node;
using Kind = Node::Kind;

std::shared_ptr<const Node> make(Kind k, std::string label = {}, std::uint64_t n = 0,
                                 std::shared_ptr<const Node> lhs = nullptr,
                                 std::shared_ptr<const Node> rhs = nullptr) {
  return std::make_shared<const Node>(Node{k, std::move(label), n, std::move(lhs), std::move(rhs)});
}

bool eval(const Node& n, const Element& e) {
  switch (n.kind) {
    case Kind::SpeciesIs: {
      const auto* m = std::get_if<MicroAtom>(&e);
      return m != nullptr && m->species.label() == n.label;
    }
    case Kind::MacroIdIs: {
      const auto* m = std::get_if<MacroAtom>(&e);
      return m != nullptr && m->id.str() == n.label;
    }
    case Kind::IsCollection:
      return std::holds_alternative<Collection>(e);
    case Kind::QcEquals: {
      const auto* c = std::get_if<Collection>(&e);
      return c != nullptr && qc(c->q).value() == n.n;
    }
    case Kind::QcAtMost: {
      const auto* c = std::get_if<Collection>(&e);
      return c != nullptr && qc(c->q).value() <= n.n;
    }
    case Kind::True:
      return true;
    case Kind::False:
      return false;
    case Kind::And:
      return eval(*n.lhs, e) && eval(*n.rhs, e);
    case Kind::Or:
      return eval(*n.lhs, e) || eval(*n.rhs, e);
    case Kind::Not:
      return !eval(*n.lhs, e);
  }
  return false;
}

std::string render(const Node& n) {
  switch (n.kind) {
    case Kind::SpeciesIs: return "species_is(" + n.label + ")";
    case Kind::MacroIdIs: return "macro_id_is(" + n.label + ")";
    case Kind::IsCollection: return "is_collection";
    case Kind::QcEquals: return "qc_equals(" + std::to_string(n.n) + ")";
    case Kind::QcAtMost: return "qc_at_most(" + std::to_string(n.n) + ")";
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::And: return "(" + render(*n.lhs) + " and " + render(*n.rhs) + ")";
    case Kind::Or: return "(" + render(*n.lhs) + " or " + render(*n.rhs) + ")";
    case Kind::Not: return "not " + render(*n.lhs);
  }
  return {};
}

}  // namespace

Predicate Predicate::species_is(Species s) { return Predicate(make(Kind::SpeciesIs, s.label())); }
Predicate Predicate::macro_id_is(MacroId id) { return Predicate(make(Kind::MacroIdIs, id.str())); }
Predicate Predicate::is_collection() { return Predicate(make(Kind::IsCollection)); }
Predicate Predicate::qc_equals(std::uint64_t n) { return Predicate(make(Kind::QcEquals, {}, n)); }
Predicate Predicate::qc_at_most(std::uint64_t n) { return Predicate(make(Kind::QcAtMost, {}, n)); }
Predicate Predicate::always() { return Predicate(make(Kind::True)); }
Predicate Predicate::never() { return Predicate(make(Kind::False)); }

Predicate operator&&(Predicate a, Predicate b) {
  return Predicate(make(Kind::And, {}, 0, std::move(a.node_), std::move(b.node_)));
}
Predicate operator||(Predicate a, Predicate b) {
  return Predicate(make(Kind::Or, {}, 0, std::move(a.node_), std::move(b.node_)));
}
Predicate operator!(Predicate a) { return Predicate(make(Kind::Not, {}, 0, std::move(a.node_))); }

bool Predicate::operator()(const Element& e) const { return eval(*node_, e); }
std::string Predicate::to_string() const { return render(*node_); }

}  // namespace nonindiv::qset
