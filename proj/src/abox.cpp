#include "alc/abox.hpp"

#include <algorithm>

namespace alc {

std::strong_ordering operator<=>(const Fact& a, const Fact& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.subject_ <=> b.subject_; c != 0) return c;
  if (a.is_inst()) return *a.concept_ <=> *b.concept_;
  if (auto c = a.role_ <=> b.role_; c != 0) return c;
  return *a.object_ <=> *b.object_;
}

AboxImpl::AboxImpl(std::initializer_list<Fact> facts) {
  for (const auto& f : facts) insert(f);
}

AboxImpl::AboxImpl(std::span<const Fact> facts) {
  for (const auto& f : facts) insert(f);
}

bool AboxImpl::contains(const Fact& f) const { return std::find(facts_.begin(), facts_.end(), f) != facts_.end(); }

bool AboxImpl::insert(Fact f) {
  if (contains(f)) return false;
  facts_.push_back(std::move(f));
  return true;
}

namespace {

template <typename Facts>
std::set<Individual> collect_individuals(const Facts& facts) {
  std::set<Individual> out;
  for (const auto& f : facts) {
    out.insert(f.subject());
    if (f.is_rel()) out.insert(f.object());
  }
  return out;
}

Individual next_anon(const std::set<Individual>& individuals) {
  // Anon sorts after Named, so the last element carries the max index if any.
  if (!individuals.empty() && individuals.rbegin()->is_anon()) return Individual::anon(individuals.rbegin()->index() + 1);
  return Individual::anon(0);
}

void collect_names(const Concept& c, std::set<ConceptName>& atoms, std::set<RoleName>& roles) {
  switch (c.kind()) {
    case ConceptKind::Atom:
      atoms.insert(c.name());
      return;
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return;
    case ConceptKind::All:
    case ConceptKind::Some:
      roles.insert(c.role().atom);
      [[fallthrough]];
    case ConceptKind::Not:
      collect_names(c.operand(), atoms, roles);
      return;
    case ConceptKind::And:
    case ConceptKind::Or:
      collect_names(c.lhs(), atoms, roles);
      collect_names(c.rhs(), atoms, roles);
      return;
  }
}

}  // namespace

std::set<Individual> individuals_of(std::span<const Fact> facts) { return collect_individuals(facts); }

std::set<Individual> individuals_of(const std::set<Fact>& facts) { return collect_individuals(facts); }

std::vector<Individual> individuals_in_order(const AboxImpl& a) {
  std::vector<Individual> out;
  auto add = [&](const Individual& x) {
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  };
  for (const auto& f : a) {
    add(f.subject());
    if (f.is_rel()) add(f.object());
  }
  return out;
}

Individual fresh_individual(std::span<const Fact> facts) { return next_anon(collect_individuals(facts)); }

Individual fresh_individual(const std::set<Fact>& facts) { return next_anon(collect_individuals(facts)); }

Signature signature_of(const AboxImpl& a) {
  std::set<ConceptName> atoms;
  std::set<RoleName> roles;
  for (const auto& f : a) {
    if (f.is_inst()) {
      collect_names(f.concept_expr(), atoms, roles);
    } else {
      roles.insert(f.role().atom);
    }
  }
  return {{atoms.begin(), atoms.end()}, {roles.begin(), roles.end()}};
}

bool is_normal_abox(const AboxImpl& a) {
  return std::all_of(a.begin(), a.end(), [](const Fact& f) { return f.is_rel() || is_nnf(f.concept_expr()); });
}

AboxImpl nnf_abox(const AboxImpl& a) {
  AboxImpl out;
  for (const auto& f : a) out.insert(f.is_inst() ? Inst(f.subject(), nnf(f.concept_expr())) : f);
  return out;
}

}  // namespace alc
