// Facts and list-based ABoxes (one tableau branch each).

#ifndef ALC_ABOX_HPP
#define ALC_ABOX_HPP

#include <compare>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "alc/concept.hpp"

namespace alc {

enum class FactKind : std::uint8_t { Inst, Rel };

// Either `x : C` or `r(x, y)`.
class Fact {
 public:
  static Fact inst(Individual x, Concept c) { return Fact(FactKind::Inst, std::move(x), std::move(c)); }
  static Fact rel(Role r, Individual x, Individual y) { return Fact(std::move(r), std::move(x), std::move(y)); }

  FactKind kind() const { return kind_; }
  bool is_inst() const { return kind_ == FactKind::Inst; }
  bool is_rel() const { return kind_ == FactKind::Rel; }

  // Inst: the individual. Rel: the source.
  const Individual& subject() const { return subject_; }
  // Inst only.
  const Concept& concept_expr() const { return *concept_; }
  // Rel only.
  const Role& role() const { return role_; }
  const Individual& object() const { return *object_; }

  friend bool operator==(const Fact&, const Fact&) = default;
  friend std::strong_ordering operator<=>(const Fact& a, const Fact& b);

 private:
  Fact(FactKind kind, Individual x, Concept c) : kind_(kind), subject_(std::move(x)), concept_(std::move(c)) {}
  Fact(Role r, Individual x, Individual y)
      : kind_(FactKind::Rel), subject_(std::move(x)), role_(std::move(r)), object_(std::move(y)) {}

  FactKind kind_;
  Individual subject_;
  std::optional<Concept> concept_;
  Role role_;
  std::optional<Individual> object_;
};

inline Fact Inst(Individual x, Concept c) { return Fact::inst(std::move(x), std::move(c)); }
inline Fact Rel(Role r, Individual x, Individual y) { return Fact::rel(std::move(r), std::move(x), std::move(y)); }
inline Fact Rel(std::string r, Individual x, Individual y) {
  return Fact::rel(Role(std::move(r)), std::move(x), std::move(y));
}

// Ordered, duplicate-free list of facts. Insertion keeps the first occurrence.
class AboxImpl {
 public:
  AboxImpl() = default;
  AboxImpl(std::initializer_list<Fact> facts);
  explicit AboxImpl(std::span<const Fact> facts);

  const std::vector<Fact>& facts() const { return facts_; }
  std::size_t size() const { return facts_.size(); }
  bool empty() const { return facts_.empty(); }
  const Fact& operator[](std::size_t i) const { return facts_[i]; }
  auto begin() const { return facts_.begin(); }
  auto end() const { return facts_.end(); }

  bool contains(const Fact& f) const;

  // Appends f unless already present. Returns whether it was added.
  bool insert(Fact f);

  friend bool operator==(const AboxImpl&, const AboxImpl&) = default;

 private:
  std::vector<Fact> facts_;
};

// Individuals occurring anywhere in the facts.
std::set<Individual> individuals_of(std::span<const Fact> facts);
inline std::set<Individual> individuals_of(const AboxImpl& a) { return individuals_of(std::span(a.facts())); }
std::set<Individual> individuals_of(const std::set<Fact>& facts);

// Individuals in order of first occurrence (Inst subject; Rel source then target).
std::vector<Individual> individuals_in_order(const AboxImpl& a);

// Anon(1 + max Anon index), or Anon(0) when there is none.
Individual fresh_individual(std::span<const Fact> facts);
inline Individual fresh_individual(const AboxImpl& a) { return fresh_individual(std::span(a.facts())); }
Individual fresh_individual(const std::set<Fact>& facts);

// Concept and role names used anywhere in the facts, sorted.
struct Signature {
  std::vector<ConceptName> atoms;
  std::vector<RoleName> roles;
};
Signature signature_of(const AboxImpl& a);

// Every Inst concept is in negation normal form.
bool is_normal_abox(const AboxImpl& a);

// Same facts with every Inst concept normalized; duplicates created by normalization are dropped.
AboxImpl nnf_abox(const AboxImpl& a);

}  // namespace alc

#endif  // ALC_ABOX_HPP
