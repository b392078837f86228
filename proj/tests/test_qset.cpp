#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "nonindiv/error.hpp"
#include "nonindiv/qset/axiom_suite.hpp"
#include "nonindiv/qset/ops.hpp"
#include "nonindiv/qset/quasi_function.hpp"
#include "nonindiv/qset/universe_io.hpp"
#include "support/qset_oracle.hpp"

using namespace nonindiv;
using namespace nonindiv::qset;
using testsupport::brute_force_sub_classes;

namespace {

const Species electron("electron");
const Species proton("proton");
const Species neutron("neutron");

QSet pure(std::initializer_list<std::pair<Species, std::uint64_t>> counts) {
  QSetBuilder b;
  for (const auto& [s, n] : counts) b.add_micro(s, n);
  return std::move(b).build();
}

}  // namespace

TEST_CASE("indist on atoms and collections") {
  CHECK(indist(micro("electron"), micro("electron")));
  CHECK_FALSE(indist(micro("electron"), micro("proton")));
  CHECK(indist(collection(pure({{electron, 2}})), collection(pure({{electron, 2}}))));
  CHECK_FALSE(indist(micro("a"), macro("a")));
  CHECK(indist(macro("a"), macro("a")));
  CHECK_FALSE(indist(macro("a"), macro("b")));
}

TEST_CASE("extensional equality") {
  CHECK(ext_eq(macro("a"), macro("a")));
  CHECK_FALSE(ext_eq(macro("a"), macro("b")));
  CHECK_THROWS_AS(ext_eq(micro("electron"), micro("electron")), IllFormed);
  CHECK_THROWS_AS(ext_eq(macro("a"), micro("electron")), IllFormed);
  CHECK(ext_eq(collection(QSet{}), collection(QSet{})));
  CHECK_FALSE(ext_eq(collection(QSet{}), macro("a")));
}

TEST_CASE("quasi-cardinal sum rule") {
  CHECK(qc(QSet{}).value() == 0);
  CHECK(qc(pure({{electron, 3}})).value() == 3);
  const QSet q = QSetBuilder().add_micro(electron, 2).add_macro(MacroId("a")).add_sub(QSet{}).build();
  CHECK(qc(q).value() == 4);
}

TEST_CASE("weak pair relative to a universe") {
  const QSet u = QSetBuilder().add_micro(electron, 3).add_micro(proton, 2).add_macro(MacroId("a")).build();
  CHECK(weak_ext_indist(weak_pair(micro("electron"), micro("proton"), u),
                        pure({{electron, 3}, {proton, 2}})));
  CHECK(weak_ext_indist(weak_pair(micro("electron"), micro("electron"), u), pure({{electron, 3}})));
  const QSet a = weak_pair(macro("a"), macro("a"), u);
  CHECK(a.macro().size() == 1);
  CHECK(qc(a).value() == 1);
  CHECK(weak_pair(micro("neutron"), macro("zz"), u).empty());
}

TEST_CASE("n-singletons") {
  const QSet u = QSetBuilder().add_micro(electron, 3).add_macro(MacroId("a")).build();
  CHECK(weak_ext_indist(n_singleton(micro("electron"), QuasiCardinal(1), u), pure({{electron, 1}})));
  CHECK(n_singleton(micro("electron"), QuasiCardinal(0), u).empty());
  CHECK_THROWS_AS(n_singleton(micro("electron"), QuasiCardinal(5), u), CapacityExceeded);
  CHECK_THROWS_AS(n_singleton(macro("a"), QuasiCardinal(1), u), InvalidArgument);
}

TEST_CASE("sub-quasi-set with prescribed quasi-cardinal") {
  const QSet q = pure({{electron, 2}, {proton, 1}});
  CHECK(sub_qset_with_qc(q, QuasiCardinal(0)).empty());
  CHECK(weak_ext_indist(sub_qset_with_qc(q, QuasiCardinal(3)), q));
  CHECK(weak_ext_indist(sub_qset_with_qc(q, QuasiCardinal(2)), pure({{electron, 2}})));
  CHECK_THROWS_AS(sub_qset_with_qc(q, QuasiCardinal(4)), CapacityExceeded);
}

TEST_CASE("power quasi-cardinal") {
  CHECK(power_qc(QSet{}).value() == 1);
  CHECK(power_qc(pure({{electron, 3}})).value() == 8);
  CHECK(power_qc(QSetBuilder().add_macro(MacroId("a")).add_macro(MacroId("b")).build()).value() == 4);
  CHECK_THROWS_AS(power_qc(pure({{electron, 64}})), Overflow);
  CHECK(power_qc(pure({{electron, 63}})).value() == (std::uint64_t{1} << 63));
}

TEST_CASE("enumerate sub classes against the brute-force oracle") {
  const QSet e3 = pure({{electron, 3}});
  CHECK(enumerate_sub_classes(e3).size() == 4);
  CHECK(brute_force_sub_classes(e3) == 4);
  CHECK(enumerate_sub_classes(QSet{}).size() == 1);
  const QSet ab = QSetBuilder().add_macro(MacroId("a")).add_macro(MacroId("b")).build();
  CHECK(enumerate_sub_classes(ab).size() == 4);
  CHECK(brute_force_sub_classes(ab) == 4);
  CHECK_THROWS_AS(enumerate_sub_classes(pure({{electron, 13}})), TooLarge);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const QSet u = random_universe(rng);
    if (qc(u).value() > kMaxEnumerableQc) continue;
    const auto classes = enumerate_sub_classes(u);
    CHECK(classes.size() == brute_force_sub_classes(u));
    for (std::size_t a = 0; a < classes.size(); ++a) {
      CHECK(is_subqset(classes[a], u));
      for (std::size_t b = a + 1; b < classes.size(); ++b) {
        CHECK_FALSE(weak_ext_indist(classes[a], classes[b]));
      }
    }
  }
}

TEST_CASE("separation") {
  const QSet q = pure({{electron, 3}, {proton, 2}});
  CHECK(weak_ext_indist(separation(q, Predicate::species_is(electron)), pure({{electron, 3}})));
  CHECK(separation(q, Predicate::never()).empty());
  CHECK(weak_ext_indist(separation(q, Predicate::always()), q));
  const QSet mixed = QSetBuilder(q).add_macro(MacroId("a")).add_sub(pure({{electron, 1}}), 2).build();
  const QSet cols = separation(mixed, Predicate::is_collection() && Predicate::qc_equals(1));
  CHECK(qc(cols).value() == 2);
  CHECK(qc(separation(mixed, !Predicate::is_collection())).value() == 6);
}

TEST_CASE("similar and Q-similar") {
  CHECK(similar(pure({{electron, 2}}), pure({{electron, 5}})));
  CHECK_FALSE(qsim(pure({{electron, 2}}), pure({{electron, 5}})));
  CHECK(qsim(pure({{electron, 2}}), pure({{electron, 2}})));
  CHECK_FALSE(similar(pure({{electron, 1}}), pure({{proton, 1}})));
  CHECK_THROWS_AS(similar(QSetBuilder().add_macro(MacroId("a")).build(), pure({{electron, 1}})),
                  NotPure);
}

TEST_CASE("quotient") {
  const auto q = quotient(pure({{proton, 1}, {electron, 2}}));
  REQUIRE(q.size() == 2);
  CHECK(std::get<MicroAtom>(q[0].representative).species == electron);
  CHECK(q[0].count.value() == 2);
  CHECK(std::get<MicroAtom>(q[1].representative).species == proton);
  CHECK(q[1].count.value() == 1);
  CHECK(quotient(QSet{}).empty());
  const auto single = quotient(pure({{electron, 4}}));
  REQUIRE(single.size() == 1);
  CHECK(single[0].count.value() == 4);
}

TEST_CASE("weak extensionality") {
  CHECK(weak_ext_indist(pure({{electron, 2}}), pure({{electron, 2}})));
  CHECK_FALSE(weak_ext_indist(pure({{electron, 2}}), pure({{electron, 3}})));
  CHECK_FALSE(weak_ext_indist(QSetBuilder().add_macro(MacroId("a")).build(),
                              QSetBuilder().add_macro(MacroId("b")).build()));
  // nested: copies of indistinguishable collections merge
  const QSet inner1 = pure({{electron, 1}});
  const QSet outer = QSetBuilder().add_sub(inner1).add_sub(pure({{electron, 1}})).build();
  REQUIRE(outer.subs().size() == 1);
  CHECK(outer.subs()[0].multiplicity.value() == 2);
}

TEST_CASE("property: weak extensionality iff equal quotient lists on pure quasi-sets") {
  std::mt19937_64 rng(3);
  const std::vector<Species> sp{electron, proton, neutron};
  auto random_pure = [&] {
    QSetBuilder b;
    for (const auto& s : sp) b.add_micro(s, rng() % 3);
    return std::move(b).build();
  };
  for (int i = 0; i < 2000; ++i) {
    const QSet x = random_pure();
    const QSet y = random_pure();
    const auto qx = quotient(x);
    const auto qy = quotient(y);
    bool same = qx.size() == qy.size();
    for (std::size_t k = 0; same && k < qx.size(); ++k) {
      same = indist(qx[k].representative, qy[k].representative) && qx[k].count == qy[k].count;
    }
    CHECK(weak_ext_indist(x, y) == same);
  }
}

TEST_CASE("builder rules for nested collections") {
  CHECK_THROWS_AS(QSetBuilder().add_sub(QSet{}, 2), InvalidArgument);
  const QSet twice = QSetBuilder().add_sub(QSet{}).add_sub(QSet{}).build();
  CHECK(qc(twice).value() == 1);
  CHECK_THROWS_AS(QSetBuilder(4).add_sub(pure({{electron, 1}}), 5), CapacityExceeded);
  CHECK_THROWS_AS(QSetBuilder().add_sub(pure({{electron, 1}}), 40).add_sub(pure({{electron, 1}}), 30),
                  CapacityExceeded);
  CHECK(QSetBuilder().add_sub(pure({{electron, 1}}), 64).build().subs()[0].multiplicity.value() == 64);
}

TEST_CASE("quasi-function congruence") {
  QuasiFunction ok{{{micro("electron"), micro("proton")}, {micro("electron"), micro("proton")}}, {}, {}};
  CHECK(validate_qf(ok).ok());
  QuasiFunction bad{{{micro("electron"), micro("proton")}, {micro("electron"), micro("neutron")}}, {}, {}};
  const auto v = validate_qf(bad);
  CHECK(v.kind == QfVerdict::Kind::Congruence);
  CHECK(v.first == 0);
  CHECK(v.second == 1);
  QuasiFunction id{{{macro("a"), macro("a")}, {macro("b"), macro("b")}}, {}, {}};
  CHECK(validate_qf(id).ok());

  QuasiFunction dom{{{micro("electron"), micro("proton")}}, pure({{proton, 1}}), {}};
  CHECK(validate_qf(dom).kind == QfVerdict::Kind::OutsideDomain);
}

TEST_CASE("property: validate_qf over random mappings") {
  std::mt19937_64 rng(5);
  const std::vector<Element> inputs{micro("s0"), micro("s1"), micro("s2"), macro("a"), macro("b")};
  const std::vector<Element> outputs{micro("t0"), micro("t1"), macro("x")};
  for (int trial = 0; trial < 500; ++trial) {
    // class-constant table
    std::vector<std::size_t> table(inputs.size());
    for (auto& t : table) t = rng() % outputs.size();
    QuasiFunction f;
    const int npairs = 1 + static_cast<int>(rng() % 10);
    for (int k = 0; k < npairs; ++k) {
      const std::size_t in = rng() % inputs.size();
      f.pairs.emplace_back(inputs[in], outputs[table[in]]);
    }
    CHECK(validate_qf(f).ok());
    // break congruence by re-routing a duplicate of the first input
    const std::size_t first_in = [&] {
      for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (indist(inputs[i], f.pairs[0].first)) return i;
      }
      return std::size_t{0};
    }();
    f.pairs.emplace_back(inputs[first_in], outputs[(table[first_in] + 1) % outputs.size()]);
    const auto v = validate_qf(f);
    REQUIRE(v.kind == QfVerdict::Kind::Congruence);
    CHECK(indist(f.pairs[v.first].first, f.pairs[v.second].first));
    CHECK_FALSE(indist(f.pairs[v.first].second, f.pairs[v.second].second));
  }
}

TEST_CASE("universe description round trip") {
  const std::string text = R"({"species":[{"label":"proton","count":2},{"label":"electron","count":3}],
    "macro":["b","a"],
    "collections":[{"multiplicity":2,"members":{"species":[{"label":"electron"}]}},
                   {"members":{"macro":["a"]}}]})";
  const QSet q = parse_universe(text);
  CHECK(qc(q).value() == 10);
  const std::string dumped = dump_universe(q);
  CHECK(dump_universe(parse_universe(dumped)) == dumped);
  CHECK(dumped.find("\"electron\"") < dumped.find("\"proton\""));

  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    const QSet u = random_universe(rng);
    const QSet back = parse_universe(dump_universe(u));
    CHECK(weak_ext_indist(u, back));
    CHECK(dump_universe(back) == dump_universe(u));
  }
  CHECK_THROWS_AS(parse_universe("{\"species\":[{\"count\":2}]}"), ConfigError);
  CHECK_THROWS_AS(parse_universe("not json"), ConfigError);
  CHECK_THROWS_AS(parse_universe(R"({"species":[{"label":"e","count":-1}]})"), ConfigError);
}

TEST_CASE("axiom suite without exhaustive sweep") {
  const auto checks = run_axiom_suite({.seed = 2, .random_universes = 200, .exhaustive = false});
  CHECK(checks.size() == 11);
  for (const auto& c : checks) {
    INFO(c.name << ": " << c.witness);
    CHECK(c.pass());
    CHECK(c.cases > 0);
  }
}
