#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nonindiv/check.hpp"
#include "nonindiv/qset/predicate.hpp"
#include "nonindiv/qset/qset.hpp"

namespace nonindiv::qset {

struct AxiomSuiteOptions {
  std::uint64_t seed = 1;
  std::size_t random_universes = 1000;
  bool exhaustive = true;
};

/// Runs the quasi-set axiom checks over the exhaustive universe family and
/// `random_universes` seeded random universes. One record per law:
///
///   equivalence_laws, ext_eq_substitutivity, ext_eq_ill_formed, qc_empty,
///   qc_sum_rule, sub_qset_existence, weak_pair_membership, separation,
///   weak_extensionality_quotient, power_qc, sub_class_count
CheckList run_axiom_suite(const AxiomSuiteOptions& options = {});

/// Exhaustive family: every micro count vector over five species with counts
/// 0..4 crossed with every subset of four macro-atoms, followed by universes
/// with up to two nested collections (nesting depth <= 2) drawn from a fixed
/// catalogue over two species.
void for_each_exhaustive_universe(const std::function<void(const QSet&)>& visit);

/// Random universe with <= 5 species, counts <= 4, <= 4 macro-atoms and
/// nesting depth <= 2.
QSet random_universe(std::mt19937_64& rng);

/// Fixed list of predicates used to exercise Separation and substitutivity.
std::vector<Predicate> predicate_catalogue();

/// Species labels "s0".."s4" and macro ids "a".."d" used by the generators.
const std::vector<Species>& suite_species();
const std::vector<MacroId>& suite_macros();

}  // namespace nonindiv::qset
