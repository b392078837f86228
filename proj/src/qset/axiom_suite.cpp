#include "nonindiv/qset/axiom_suite.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "nonindiv/error.hpp"
#include "nonindiv/qset/ops.hpp"

namespace nonindiv::qset {

namespace {

std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

// Sorted textual normal form. Nested classes are sorted by their own normal
// form, so two quasi-sets share it iff their quotients match class by class.
std::string normal_form(const QSet& q) {
  std::string out = "{";
  for (const auto& [s, n] : q.micro()) out += s.label() + "*" + std::to_string(n.value()) + ",";
  out += "|";
  for (const auto& id : q.macro()) out += id.str() + ",";
  out += "|";
  std::vector<std::string> subs;
  for (const auto& s : q.subs()) {
    subs.push_back(normal_form(s.representative) + "*" + std::to_string(s.multiplicity.value()));
  }
  std::sort(subs.begin(), subs.end());
  for (const auto& s : subs) out += s + ",";
  return out + "}";
}

// Same content, inserted in reverse order with nested representatives rebuilt.
QSet rebuilt(const QSet& q) {
  QSetBuilder b;
  for (auto it = q.subs().rbegin(); it != q.subs().rend(); ++it) {
    b.add_sub(rebuilt(it->representative), it->multiplicity.value());
  }
  for (auto it = q.macro().rbegin(); it != q.macro().rend(); ++it) b.add_macro(*it);
  for (auto it = q.micro().rbegin(); it != q.micro().rend(); ++it) {
    b.add_micro(it->first, it->second.value());
  }
  return std::move(b).build();
}

std::string show(const QSet& q) { return normal_form(q); }

std::string show(const Element& e) {
  if (const auto* m = std::get_if<MicroAtom>(&e)) return "m:" + m->species.label();
  if (const auto* m = std::get_if<MacroAtom>(&e)) return "M:" + m->id.str();
  return "Q:" + normal_form(std::get<Collection>(e).q);
}

std::vector<QSet> catalogue() {
  const auto& sp = suite_species();
  const auto& mc = suite_macros();
  const QSet empty;
  const QSet just_a = QSetBuilder().add_macro(mc[0]).build();
  const QSet one = QSetBuilder().add_micro(sp[0]).build();
  const QSet two = QSetBuilder().add_micro(sp[0], 2).build();
  const QSet mixed = QSetBuilder().add_micro(sp[0]).add_micro(sp[1]).build();
  const QSet nested = QSetBuilder().add_micro(sp[1]).add_sub(one, 2).build();
  const QSet nested_set = QSetBuilder().add_sub(just_a).build();
  const QSet nested_macro = QSetBuilder().add_macro(mc[0]).add_sub(two).build();
  return {empty, just_a, one, two, mixed, nested, nested_set, nested_macro};
}

QSet random_collection(std::mt19937_64& rng, int depth) {
  const auto& sp = suite_species();
  const auto& mc = suite_macros();
  QSetBuilder b;
  for (std::size_t i = 0; i < 3; ++i) b.add_micro(sp[i], below(rng, 3));
  if (below(rng, 3) == 0) b.add_macro(mc[below(rng, mc.size())]);
  if (depth > 1 && below(rng, 2) == 0) {
    QSet inner = random_collection(rng, depth - 1);
    b.add_sub(inner, inner.is_set() ? 1 : 1 + below(rng, 2));
  }
  return std::move(b).build();
}

struct Suite {
  CheckRecord qc_sum{"qc_sum_rule"};
  CheckRecord sub_exist{"sub_qset_existence"};
  CheckRecord pair{"weak_pair_membership"};
  CheckRecord sep{"separation"};
  CheckRecord we{"weak_extensionality_quotient"};
  CheckRecord power{"power_qc"};
  CheckRecord classes{"sub_class_count"};
  std::vector<Predicate> predicates = predicate_catalogue();
  std::vector<Element> foreign = {micro("foreign"), macro("zz"),
                                  collection(QSetBuilder().add_micro(Species("foreign")).build())};
  QSet previous;
  std::uint64_t visited = 0;

  void check_universe(const QSet& u, bool enumerate) {
    const auto entries = quotient(u);
    const std::uint64_t total = qc(u).value();

    std::uint64_t recount = 0;
    for (const auto& e : entries) recount += e.count.value();
    bool ok = recount == total;
    if (u.is_set()) ok = ok && total == u.macro().size() + u.subs().size();
    qc_sum.check(ok, [&] { return show(u); });

    for (std::uint64_t beta = 0; beta <= total; ++beta) {
      const QSet y = sub_qset_with_qc(u, QuasiCardinal(beta));
      sub_exist.check(is_subqset(y, u) && qc(y).value() == beta, [&] { return show(u) + " beta=" + std::to_string(beta); });
    }
    bool threw = false;
    try {
      (void)sub_qset_with_qc(u, QuasiCardinal(total + 1));
    } catch (const CapacityExceeded&) {
      threw = true;
    }
    sub_exist.check(threw, [&] { return show(u) + " beta=qc+1 accepted"; });

    std::vector<Element> probes;
    for (const auto& e : entries) probes.push_back(e.representative);
    probes.insert(probes.end(), foreign.begin(), foreign.end());
    for (std::size_t i = 0; i < probes.size(); ++i) {
      for (std::size_t j = i; j < probes.size(); ++j) check_pair(u, probes[i], probes[j]);
    }

    for (const auto& p : predicates) {
      const QSet r = separation(u, p);
      bool exact = is_subqset(r, u);
      for (const auto& e : entries) {
        const std::uint64_t want = p(e.representative) ? e.count.value() : 0;
        exact = exact && count_indist(r, e.representative).value() == want;
      }
      sep.check(exact && qc(r).value() <= total, [&] { return show(u) + " " + p.to_string(); });
    }

    const QSet same = rebuilt(u);
    we.check(weak_ext_indist(u, same) && normal_form(u) == normal_form(same), [&] { return show(u) + " rebuilt"; });
    QSetBuilder bumped(u);
    if (!u.micro().empty()) {
      bumped.add_micro(u.micro().begin()->first);
    } else {
      bumped.add_macro(MacroId("zz"));
    }
    const QSet other = std::move(bumped).build();
    we.check(!weak_ext_indist(u, other) && normal_form(u) != normal_form(other), [&] { return show(u) + " perturbed"; });
    if (visited++ > 0) {
      we.check(weak_ext_indist(u, previous) == (normal_form(u) == normal_form(previous)), [&] { return show(u) + " vs " + show(previous); });
    }
    previous = u;

    if (total < 64) power.check(power_qc(u).value() == (std::uint64_t{1} << total), [&] { return show(u); });
    if (enumerate && total <= kMaxEnumerableQc) check_classes(u, entries);
  }

  void check_pair(const QSet& u, const Element& x, const Element& y) {
    const QSet r = weak_pair(x, y, u);
    bool ok = is_subqset(r, u);
    for (const auto& e : quotient(r)) {
      ok = ok && (indist(e.representative, x) || indist(e.representative, y));
    }
    ok = ok && count_indist(r, x) == count_indist(u, x) && count_indist(r, y) == count_indist(u, y);
    const std::uint64_t expect =
        count_indist(u, x).value() + (indist(x, y) ? 0 : count_indist(u, y).value());
    ok = ok && qc(r).value() == expect;
    pair.check(ok, [&] { return show(u) + " x=" + show(x) + " y=" + show(y); });
  }

  void check_classes(const QSet& u, const std::vector<QuotientEntry>& entries) {
    const auto subs = enumerate_sub_classes(u);
    std::uint64_t expect = 1;
    for (const auto& e : entries) expect *= e.count.value() + 1;
    bool ok = subs.size() == expect;
    if (u.is_set()) ok = ok && subs.size() == power_qc(u).value();
    if (u.is_pure() && u.micro().size() == 1) ok = ok && subs.size() == qc(u).value() + 1;
    std::vector<std::string> forms;
    for (const auto& s : subs) {
      ok = ok && is_subqset(s, u);
      forms.push_back(normal_form(s));
    }
    std::sort(forms.begin(), forms.end());
    ok = ok && std::adjacent_find(forms.begin(), forms.end()) == forms.end();
    classes.check(ok, [&] { return show(u); });
  }
};

}  // namespace

const std::vector<Species>& suite_species() {
  static const std::vector<Species> s{Species("s0"), Species("s1"), Species("s2"), Species("s3"),
                                      Species("s4")};
  return s;
}

const std::vector<MacroId>& suite_macros() {
  static const std::vector<MacroId> m{MacroId("a"), MacroId("b"), MacroId("c"), MacroId("d")};
  return m;
}

std::vector<Predicate> predicate_catalogue() {
  const auto& sp = suite_species();
  const auto& mc = suite_macros();
  return {
      Predicate::always(),
      Predicate::never(),
      Predicate::species_is(sp[0]),
      Predicate::species_is(sp[3]),
      Predicate::macro_id_is(mc[0]),
      Predicate::is_collection(),
      Predicate::qc_equals(1),
      Predicate::qc_at_most(2),
      Predicate::species_is(sp[1]) || Predicate::is_collection(),
      !Predicate::macro_id_is(mc[1]) && !Predicate::is_collection(),
  };
}

void for_each_exhaustive_universe(const std::function<void(const QSet&)>& visit) {
  const auto& sp = suite_species();
  const auto& mc = suite_macros();
  std::array<std::uint64_t, 5> counts{};
  while (true) {
    for (unsigned mask = 0; mask < 16; ++mask) {
      QSetBuilder b;
      for (std::size_t i = 0; i < counts.size(); ++i) b.add_micro(sp[i], counts[i]);
      for (std::size_t i = 0; i < mc.size(); ++i) {
        if ((mask >> i) & 1U) b.add_macro(mc[i]);
      }
      visit(std::move(b).build());
    }
    std::size_t i = 0;
    for (; i < counts.size(); ++i) {
      if (counts[i] < 4) {
        ++counts[i];
        break;
      }
      counts[i] = 0;
    }
    if (i == counts.size()) break;
  }

  const auto cat = catalogue();
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> selections;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    selections.push_back({{i, 1}});
    if (!cat[i].is_set()) selections.push_back({{i, 2}});
    for (std::size_t j = i + 1; j < cat.size(); ++j) selections.push_back({{i, 1}, {j, 1}});
  }
  for (const auto& sel : selections) {
    for (std::uint64_t n0 = 0; n0 <= 4; ++n0) {
      for (std::uint64_t n1 = 0; n1 <= 4; ++n1) {
        for (unsigned mask = 0; mask < 4; ++mask) {
          QSetBuilder b;
          b.add_micro(sp[0], n0).add_micro(sp[1], n1);
          for (std::size_t i = 0; i < 2; ++i) {
            if ((mask >> i) & 1U) b.add_macro(mc[i]);
          }
          for (const auto& [idx, mult] : sel) b.add_sub(cat[idx], mult);
          visit(std::move(b).build());
        }
      }
    }
  }
}

QSet random_universe(std::mt19937_64& rng) {
  const auto& sp = suite_species();
  const auto& mc = suite_macros();
  QSetBuilder b;
  for (const auto& s : sp) {
    if (below(rng, 2) == 0) b.add_micro(s, 1 + below(rng, 4));
  }
  for (const auto& m : mc) {
    if (below(rng, 2) == 0) b.add_macro(m);
  }
  const std::uint64_t nsubs = below(rng, 3);
  for (std::uint64_t i = 0; i < nsubs; ++i) {
    QSet c = random_collection(rng, 1 + static_cast<int>(below(rng, 2)));
    b.add_sub(c, c.is_set() ? 1 : 1 + below(rng, 3));
  }
  return std::move(b).build();
}

CheckList run_axiom_suite(const AxiomSuiteOptions& options) {
  Suite suite;
  std::vector<Element> pool;
  for (const auto& s : suite_species()) pool.push_back(MicroAtom{s});
  for (const auto& m : suite_macros()) pool.push_back(MacroAtom{m});
  for (const auto& c : catalogue()) {
    pool.push_back(Collection{c});
    pool.push_back(Collection{rebuilt(c)});
  }

  std::uint64_t index = 0;
  if (options.exhaustive) {
    for_each_exhaustive_universe([&](const QSet& u) {
      suite.check_universe(u, index % 7 == 0 || !u.subs().empty());
      if (index % 499 == 0) pool.push_back(Collection{u});
      ++index;
    });
  }
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < options.random_universes; ++i) {
    const QSet u = random_universe(rng);
    suite.check_universe(u, true);
    if (i % 10 == 0) {
      pool.push_back(Collection{u});
      pool.push_back(Collection{rebuilt(u)});
    }
  }

  CheckRecord laws{"equivalence_laws"};
  const std::size_t n = pool.size();
  std::vector<char> rel(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rel[i * n + j] = indist(pool[i], pool[j]) ? 1 : 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    laws.check(rel[i * n + i] == 1, [&] { return "reflexivity " + show(pool[i]); });
    for (std::size_t j = 0; j < n; ++j) {
      laws.check(rel[i * n + j] == rel[j * n + i], [&] { return "symmetry " + show(pool[i]) + " " + show(pool[j]); });
      if (rel[i * n + j] == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (rel[j * n + k] == 1 && rel[i * n + k] == 0) {
          laws.check(false, [&] { return "transitivity " + show(pool[i]) + " " + show(pool[j]) + " " +
                                 show(pool[k]); });
        }
      }
    }
  }

  CheckRecord subst{"ext_eq_substitutivity"};
  CheckRecord ill{"ext_eq_ill_formed"};
  const auto predicates = predicate_catalogue();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::holds_alternative<MicroAtom>(pool[i])) {
      bool threw = false;
      try {
        (void)ext_eq(pool[i], pool[i]);
      } catch (const IllFormed&) {
        threw = true;
      }
      ill.check(threw, [&] { return show(pool[i]); });
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (std::holds_alternative<MicroAtom>(pool[j]) || !ext_eq(pool[i], pool[j])) continue;
      for (const auto& p : predicates) {
        subst.check(p(pool[i]) == p(pool[j]), [&] { return show(pool[i]) + " " + show(pool[j]) + " " + p.to_string(); });
      }
    }
  }

  CheckRecord empty{"qc_empty"};
  empty.check(qc(QSet{}).value() == 0, [&] { return "qc(empty) != 0"; });

  return {laws, subst, ill, empty, suite.qc_sum, suite.sub_exist, suite.pair, suite.sep,
          suite.we, suite.power, suite.classes};
}

}  // namespace nonindiv::qset
