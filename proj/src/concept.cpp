#include "alc/concept.hpp"

#include <algorithm>

namespace alc {

std::string Individual::to_string() const {
  if (is_named()) return name();
  return "_" + std::to_string(index());
}

Concept Concept::make(ConceptKind kind, ConceptName name, Role role, std::vector<Concept> children) {
  return Concept(std::make_shared<const Node>(Node{kind, std::move(name), std::move(role), std::move(children)}));
}

Concept Concept::atom(std::string name) { return make(ConceptKind::Atom, ConceptName{std::move(name)}, {}, {}); }

Concept Concept::top() {
  static const Concept instance = make(ConceptKind::Top, {}, {}, {});
  return instance;
}

Concept Concept::bottom() {
  static const Concept instance = make(ConceptKind::Bottom, {}, {}, {});
  return instance;
}

Concept Concept::negation(Concept c) { return make(ConceptKind::Not, {}, {}, {std::move(c)}); }

Concept Concept::conjunction(Concept lhs, Concept rhs) {
  return make(ConceptKind::And, {}, {}, {std::move(lhs), std::move(rhs)});
}

Concept Concept::disjunction(Concept lhs, Concept rhs) {
  return make(ConceptKind::Or, {}, {}, {std::move(lhs), std::move(rhs)});
}

Concept Concept::forall(Role r, Concept c) { return make(ConceptKind::All, {}, std::move(r), {std::move(c)}); }

Concept Concept::exists(Role r, Concept c) { return make(ConceptKind::Some, {}, std::move(r), {std::move(c)}); }

bool operator==(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.name == y.name && x.role == y.role && x.children == y.children;
}

std::strong_ordering operator<=>(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  if (auto c = x.name <=> y.name; c != 0) return c;
  if (auto c = x.role <=> y.role; c != 0) return c;
  return std::lexicographical_compare_three_way(x.children.begin(), x.children.end(), y.children.begin(),
                                                y.children.end());
}

std::size_t size_concept(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Atom:
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return 1;
    case ConceptKind::Not:
    case ConceptKind::All:
    case ConceptKind::Some:
      return 1 + size_concept(c.operand());
    case ConceptKind::And:
    case ConceptKind::Or:
      return 1 + size_concept(c.lhs()) + size_concept(c.rhs());
  }
  return 0;
}

namespace {

Concept nnf_negated(const Concept& c);

Concept nnf_positive(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Atom:
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return c;
    case ConceptKind::Not:
      return nnf_negated(c.operand());
    case ConceptKind::And:
      return And(nnf_positive(c.lhs()), nnf_positive(c.rhs()));
    case ConceptKind::Or:
      return Or(nnf_positive(c.lhs()), nnf_positive(c.rhs()));
    case ConceptKind::All:
      return All(c.role(), nnf_positive(c.operand()));
    case ConceptKind::Some:
      return Some(c.role(), nnf_positive(c.operand()));
  }
  return c;
}

// nnf(Not(c))
Concept nnf_negated(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Atom:
      return Not(c);
    case ConceptKind::Top:
      return Bottom();
    case ConceptKind::Bottom:
      return Top();
    case ConceptKind::Not:
      return nnf_positive(c.operand());
    case ConceptKind::And:
      return Or(nnf_negated(c.lhs()), nnf_negated(c.rhs()));
    case ConceptKind::Or:
      return And(nnf_negated(c.lhs()), nnf_negated(c.rhs()));
    case ConceptKind::All:
      return Some(c.role(), nnf_negated(c.operand()));
    case ConceptKind::Some:
      return All(c.role(), nnf_negated(c.operand()));
  }
  return c;
}

std::size_t count_exists(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Atom:
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return 0;
    case ConceptKind::Not:
    case ConceptKind::All:
      return count_exists(c.operand());
    case ConceptKind::Some:
      return 1 + count_exists(c.operand());
    case ConceptKind::And:
    case ConceptKind::Or:
      return count_exists(c.lhs()) + count_exists(c.rhs());
  }
  return 0;
}

}  // namespace

Concept nnf(const Concept& c) { return nnf_positive(c); }

bool is_nnf(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Atom:
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return true;
    case ConceptKind::Not:
      return c.operand().is(ConceptKind::Atom);
    case ConceptKind::All:
    case ConceptKind::Some:
      return is_nnf(c.operand());
    case ConceptKind::And:
    case ConceptKind::Or:
      return is_nnf(c.lhs()) && is_nnf(c.rhs());
  }
  return false;
}

std::size_t nested_exists_count(const Concept& c) {
  return count_exists(c) - (c.is(ConceptKind::Some) ? 1 : 0);
}

std::size_t concept_depth(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Atom:
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return 0;
    case ConceptKind::Not:
    case ConceptKind::All:
    case ConceptKind::Some:
      return 1 + concept_depth(c.operand());
    case ConceptKind::And:
    case ConceptKind::Or:
      return 1 + std::max(concept_depth(c.lhs()), concept_depth(c.rhs()));
  }
  return 0;
}

}  // namespace alc
