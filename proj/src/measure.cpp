#include "alc/measure.hpp"

#include <algorithm>

#include "alc/error.hpp"
#include "alc/rules.hpp"

namespace alc {

namespace {

std::size_t pending_successors(const AboxImpl& a, const Individual& x, const Role& r, const Concept& c) {
  std::size_t n = 0;
  for (const auto& f : a)
    if (f.is_rel() && f.role() == r && f.subject() == x && !a.contains(Inst(f.object(), c))) ++n;
  return n;
}

MeasurePair pair_of(const AboxImpl& a, const Fact& f, std::size_t comp22) {
  if (f.is_rel()) return {0, 0};
  const auto& d = f.concept_expr();
  switch (d.kind()) {
    case ConceptKind::And:
      return appcond_and(a, f) ? MeasurePair{size_concept(d), 0} : MeasurePair{};
    case ConceptKind::Or:
      return appcond_or(a, f) ? MeasurePair{size_concept(d), 0} : MeasurePair{};
    case ConceptKind::Some:
      return appcond_some(a, f) ? MeasurePair{size_concept(d), 0} : MeasurePair{};
    case ConceptKind::All:
      return {size_concept(d), pending_successors(a, f.subject(), d.role(), d.operand()) + comp22};
    default:
      return {0, 0};
  }
}

}  // namespace

std::size_t reducible_hidden_ex_count(const AboxImpl& a) {
  std::size_t n = 0;
  for (const auto& f : a) {
    if (!f.is_inst()) continue;
    if (appcond_some(a, f)) ++n;
    n += nested_exists_count(f.concept_expr());
  }
  return n;
}

MeasurePair measure_fact(const AboxImpl& a, const Fact& f) {
  if (!a.contains(f)) throw PreconditionError("measure_fact: fact is not in the abox");
  const bool universal = f.is_inst() && f.concept_expr().is(ConceptKind::All);
  return pair_of(a, f, universal ? reducible_hidden_ex_count(a) : 0);
}

BranchMeasure measure_abox(const AboxImpl& a) {
  BranchMeasure m;
  const bool any_universal =
      std::any_of(a.begin(), a.end(), [](const Fact& f) { return f.is_inst() && f.concept_expr().is(ConceptKind::All); });
  const std::size_t comp22 = any_universal ? reducible_hidden_ex_count(a) : 0;
  for (const auto& f : a) ++m[pair_of(a, f, comp22)];
  return m;
}

std::vector<MeasurePair> sorted_pairs(const BranchMeasure& m) {
  std::vector<MeasurePair> out;
  for (auto it = m.rbegin(); it != m.rend(); ++it) out.insert(out.end(), it->second, it->first);
  return out;
}

// For a strict order, m1 < m2 iff m1 != m2 and every pair m1 has in excess is
// dominated by some pair m2 has in excess.
bool multiset_less(const BranchMeasure& m1, const BranchMeasure& m2) {
  auto count = [](const BranchMeasure& m, const MeasurePair& p) {
    auto it = m.find(p);
    return it == m.end() ? std::size_t{0} : it->second;
  };
  std::vector<MeasurePair> removed;
  for (const auto& [p, k] : m2)
    if (k > count(m1, p)) removed.push_back(p);
  bool differs = !removed.empty();
  for (const auto& [p, k] : m1) {
    if (k <= count(m2, p)) continue;
    differs = true;
    if (std::none_of(removed.begin(), removed.end(), [&](const MeasurePair& q) { return p < q; })) return false;
  }
  return differs;
}

bool assert_decrease(const AboxImpl& before, const AboxImpl& after) {
  return multiset_less(measure_abox(after), measure_abox(before));
}

bool progress_check(const AboxImpl& before, const AboxImpl& after) {
  const auto b = abstract(before);
  const auto a = abstract(after);
  if (a.size() <= b.size() || !std::includes(a.begin(), a.end(), b.begin(), b.end())) return false;
  const auto old_individuals = individuals_of(before);
  std::vector<Individual> added;
  for (const auto& x : individuals_of(after))
    if (!old_individuals.contains(x)) added.push_back(x);
  return added.empty() || (added.size() == 1 && added.front() == fresh_individual(before));
}

}  // namespace alc
