// Termination measure: one (comp1, comp2) pair per fact, compared as a
// multiset under the Dershowitz-Manna extension of the lexicographic order.

#ifndef ALC_MEASURE_HPP
#define ALC_MEASURE_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "alc/abox.hpp"

namespace alc {

struct MeasurePair {
  std::size_t comp1 = 0;
  std::size_t comp2 = 0;
  friend auto operator<=>(const MeasurePair&, const MeasurePair&) = default;
};

// Pair -> positive multiplicity.
using BranchMeasure = std::map<MeasurePair, std::size_t>;

// Sum over Inst facts x : D of [D is an applicable existential] plus the
// number of existentials strictly below the root of D.
std::size_t reducible_hidden_ex_count(const AboxImpl& a);

// Pair of f in the context of a. Throws PreconditionError if f is not in a.
MeasurePair measure_fact(const AboxImpl& a, const Fact& f);

BranchMeasure measure_abox(const AboxImpl& a);

// Pairs in descending order, with multiplicity.
std::vector<MeasurePair> sorted_pairs(const BranchMeasure& m);

// m1 < m2 in the multiset extension of the pair order.
bool multiset_less(const BranchMeasure& m1, const BranchMeasure& m2);

// measure(after) < measure(before).
bool assert_decrease(const AboxImpl& before, const AboxImpl& after);

// after strictly extends before, and introduces at most the one individual
// fresh_individual(before).
bool progress_check(const AboxImpl& before, const AboxImpl& after);

}  // namespace alc

#endif  // ALC_MEASURE_HPP
