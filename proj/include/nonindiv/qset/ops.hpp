#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nonindiv/qset/predicate.hpp"
#include "nonindiv/qset/qset.hpp"

namespace nonindiv::qset {

/// ≡ on elements. Micro/micro compares species, macro/macro compares ids,
/// collections use weak extensionality; mixed kinds are never ≡.
bool indist(const Element& a, const Element& b);

/// Extensional equality =_E. Throws IllFormed when either side is an m-atom.
bool ext_eq(const Element& a, const Element& b);

QuasiCardinal qc(const QSet& q);

/// [x, y] relative to the finite universe `universe`: every element of the
/// universe that is ≡ x or ≡ y. When x ≡ y this is [x].
QSet weak_pair(const Element& x, const Element& y, const QSet& universe);

/// [x]_n: an n-element sub-quasi-set of [x]. `x` must be a micro-atom.
/// Throws CapacityExceeded when n > qc([x]).
QSet n_singleton(const Element& x, QuasiCardinal n, const QSet& universe);

/// Some y ⊆ q with qc(y) = beta. Selection is deterministic: species in label
/// order, then macro ids, then nested classes in stored order.
QSet sub_qset_with_qc(const QSet& q, QuasiCardinal beta);

/// 2^qc(q), the declared quasi-cardinal of the power quasi-set.
/// Throws Overflow when qc(q) >= 64.
QuasiCardinal power_qc(const QSet& q);

inline constexpr std::uint64_t kMaxEnumerableQc = 12;

/// All pairwise non-≡ sub-quasi-sets of q. Throws TooLarge for qc(q) > 12.
std::vector<QSet> enumerate_sub_classes(const QSet& q);

/// [t ∈ q : p(t)].
QSet separation(const QSet& q, const Predicate& p);

/// Sim(x, y). Both must be pure; throws NotPure otherwise.
bool similar(const QSet& x, const QSet& y);
/// QSim(x, y): similar with equal quasi-cardinals.
bool qsim(const QSet& x, const QSet& y);

struct QuotientEntry {
  Element representative;
  QuasiCardinal count;
};

/// x/≡ as (class representative, multiplicity) pairs: species by label,
/// macro ids in order, then nested classes in stored order.
std::vector<QuotientEntry> quotient(const QSet& q);

/// Weak extensionality decision procedure; this is ≡ between quasi-sets.
bool weak_ext_indist(const QSet& x, const QSet& y);

/// Sub-quasi-set relation, with nested classes compared up to ≡.
bool is_subqset(const QSet& y, const QSet& x);

/// Number of elements of q that are ≡ e.
QuasiCardinal count_indist(const QSet& q, const Element& e);

}  // namespace nonindiv::qset
