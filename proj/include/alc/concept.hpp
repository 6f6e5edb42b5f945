// ALC abstract syntax: names, roles, individuals and concepts.

#ifndef ALC_CONCEPT_HPP
#define ALC_CONCEPT_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace alc {

struct ConceptName {
  std::string name;
  friend auto operator<=>(const ConceptName&, const ConceptName&) = default;
};

struct RoleName {
  std::string name;
  friend auto operator<=>(const RoleName&, const RoleName&) = default;
};

// Atomic roles only.
struct Role {
  RoleName atom;
  Role() = default;
  explicit Role(std::string name) : atom{std::move(name)} {}
  explicit Role(RoleName name) : atom(std::move(name)) {}
  const std::string& name() const { return atom.name; }
  friend auto operator<=>(const Role&, const Role&) = default;
};

// User individuals are Named; the tableau only ever allocates Anon ones.
class Individual {
 public:
  static Individual named(std::string name) { return Individual(Rep{std::in_place_index<0>, std::move(name)}); }
  static Individual anon(std::uint64_t index) { return Individual(Rep{std::in_place_index<1>, index}); }

  bool is_named() const { return rep_.index() == 0; }
  bool is_anon() const { return rep_.index() == 1; }
  const std::string& name() const { return std::get<0>(rep_); }
  std::uint64_t index() const { return std::get<1>(rep_); }

  // Named individuals print as their name, Anon(k) as "_k".
  std::string to_string() const;

  friend bool operator==(const Individual&, const Individual&) = default;
  friend std::strong_ordering operator<=>(const Individual& a, const Individual& b) {
    if (auto c = a.rep_.index() <=> b.rep_.index(); c != 0) return c;
    if (a.is_named()) return a.name() <=> b.name();
    return a.index() <=> b.index();
  }

 private:
  using Rep = std::variant<std::string, std::uint64_t>;
  explicit Individual(Rep rep) : rep_(std::move(rep)) {}
  Rep rep_;
};

enum class ConceptKind : std::uint8_t { Atom, Top, Bottom, Not, And, Or, All, Some };

// Immutable concept tree. Copies share structure.
class Concept {
 public:
  static Concept atom(std::string name);
  static Concept top();
  static Concept bottom();
  static Concept negation(Concept c);
  static Concept conjunction(Concept lhs, Concept rhs);
  static Concept disjunction(Concept lhs, Concept rhs);
  static Concept forall(Role r, Concept c);
  static Concept exists(Role r, Concept c);

  ConceptKind kind() const { return node_->kind; }
  bool is(ConceptKind k) const { return node_->kind == k; }

  // Atom only.
  const ConceptName& name() const { return node_->name; }
  // All/Some only.
  const Role& role() const { return node_->role; }
  // Body of Not/All/Some.
  const Concept& operand() const { return node_->children[0]; }
  // Children of And/Or.
  const Concept& lhs() const { return node_->children[0]; }
  const Concept& rhs() const { return node_->children[1]; }

  friend bool operator==(const Concept& a, const Concept& b);
  friend std::strong_ordering operator<=>(const Concept& a, const Concept& b);

 private:
  struct Node {
    ConceptKind kind;
    ConceptName name;
    Role role;
    std::vector<Concept> children;
  };
  explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Concept make(ConceptKind kind, ConceptName name, Role role, std::vector<Concept> children);

  std::shared_ptr<const Node> node_;
};

// Expression-style constructors.
inline Concept Atom(std::string name) { return Concept::atom(std::move(name)); }
inline Concept Top() { return Concept::top(); }
inline Concept Bottom() { return Concept::bottom(); }
inline Concept Not(Concept c) { return Concept::negation(std::move(c)); }
inline Concept And(Concept a, Concept b) { return Concept::conjunction(std::move(a), std::move(b)); }
inline Concept Or(Concept a, Concept b) { return Concept::disjunction(std::move(a), std::move(b)); }
inline Concept All(Role r, Concept c) { return Concept::forall(std::move(r), std::move(c)); }
inline Concept Some(Role r, Concept c) { return Concept::exists(std::move(r), std::move(c)); }
inline Concept All(std::string r, Concept c) { return All(Role(std::move(r)), std::move(c)); }
inline Concept Some(std::string r, Concept c) { return Some(Role(std::move(r)), std::move(c)); }

// Number of constructor nodes.
std::size_t size_concept(const Concept& c);

// Push negations inward until they sit directly above atoms.
Concept nnf(const Concept& c);

bool is_nnf(const Concept& c);

// Number of Some nodes strictly below the root of c.
std::size_t nested_exists_count(const Concept& c);

// Constructor nesting depth; atoms, Top and Bottom have depth 0.
std::size_t concept_depth(const Concept& c);

}  // namespace alc

#endif  // ALC_CONCEPT_HPP
