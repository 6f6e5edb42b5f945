// Finite interpretations, the concept/fact evaluators and a bounded
// brute-force model finder used as a testing oracle.

#ifndef ALC_SEMANTICS_HPP
#define ALC_SEMANTICS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "alc/abox.hpp"

namespace alc {

using Element = std::uint32_t;
using ElementSet = std::set<Element>;
using ElementPairs = std::set<std::pair<Element, Element>>;

// All extensions live inside `domain`; unmapped names have empty extensions.
struct Interpretation {
  ElementSet domain;
  std::map<ConceptName, ElementSet> concept_map;
  std::map<RoleName, ElementPairs> role_map;
  std::map<Individual, Element> individual_map;

  // Throws PreconditionError on an empty domain or a value outside it.
  void validate() const;

  friend bool operator==(const Interpretation&, const Interpretation&) = default;
};

ElementPairs interp_role(const Interpretation& i, const Role& r);

ElementSet interp_concept(const Interpretation& i, const Concept& c);

// The concept's extension is non-empty.
bool is_model(const Interpretation& i, const Concept& c);

// Throws PreconditionError if an individual of f is unassigned.
bool satisfies_fact(const Interpretation& i, const Fact& f);

bool satisfies_abox(const Interpretation& i, const AboxImpl& a);

struct OracleConfig {
  std::size_t max_domain = 1;
  std::vector<ConceptName> atoms;
  std::vector<RoleName> roles;
  // Upper bound on the number of interpretations the search may visit.
  std::uint64_t ceiling = std::uint64_t{1} << 24;

  // Config over exactly the names of `a`.
  static OracleConfig covering(const AboxImpl& a, std::size_t max_domain);
};

// Extension masks are 64-bit, so domains are capped at this size.
inline constexpr std::size_t kOracleMaxDomain = 8;

// Number of interpretations the oracle would enumerate for `a` (saturating).
std::uint64_t oracle_enumeration_count(const AboxImpl& a, const OracleConfig& cfg);

// Exhaustive search over every interpretation with 1..max_domain elements.
//
// Order: domain size ascending; then concept_map as an outer counter (bit
// atom * n + e set means e is in the atom), role_map as a middle counter
// (bit role * n * n + src * n + dst), and individual_map as an inner
// mixed-radix counter over individuals_of(a) in sorted order with the first
// individual varying fastest. The first satisfying interpretation is
// returned.
//
// Throws OracleCoverageError when cfg does not name every atom/role of `a`,
// and OracleCeilingExceeded when the enumeration count exceeds cfg.ceiling
// or max_domain exceeds kOracleMaxDomain.
std::optional<Interpretation> oracle_find_model(const AboxImpl& a, const OracleConfig& cfg);

}  // namespace alc

#endif  // ALC_SEMANTICS_HPP
