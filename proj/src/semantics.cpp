#include "alc/semantics.hpp"

#include <algorithm>
#include <limits>

#include "alc/error.hpp"

namespace alc {

void Interpretation::validate() const {
  if (domain.empty()) throw PreconditionError("interpretation has an empty domain");
  auto inside = [&](Element e) { return domain.contains(e); };
  for (const auto& [name, ext] : concept_map)
    if (!std::all_of(ext.begin(), ext.end(), inside))
      throw PreconditionError("concept " + name.name + " maps outside the domain");
  for (const auto& [name, ext] : role_map)
    for (const auto& [x, y] : ext)
      if (!inside(x) || !inside(y)) throw PreconditionError("role " + name.name + " maps outside the domain");
  for (const auto& [ind, e] : individual_map)
    if (!inside(e)) throw PreconditionError("individual " + ind.to_string() + " maps outside the domain");
}

ElementPairs interp_role(const Interpretation& i, const Role& r) {
  auto it = i.role_map.find(r.atom);
  return it == i.role_map.end() ? ElementPairs{} : it->second;
}

ElementSet interp_concept(const Interpretation& i, const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top:
      return i.domain;
    case ConceptKind::Bottom:
      return {};
    case ConceptKind::Atom: {
      auto it = i.concept_map.find(c.name());
      return it == i.concept_map.end() ? ElementSet{} : it->second;
    }
    case ConceptKind::Not: {
      const auto inner = interp_concept(i, c.operand());
      ElementSet out;
      std::set_difference(i.domain.begin(), i.domain.end(), inner.begin(), inner.end(),
                          std::inserter(out, out.end()));
      return out;
    }
    case ConceptKind::And: {
      const auto l = interp_concept(i, c.lhs());
      const auto r = interp_concept(i, c.rhs());
      ElementSet out;
      std::set_intersection(l.begin(), l.end(), r.begin(), r.end(), std::inserter(out, out.end()));
      return out;
    }
    case ConceptKind::Or: {
      auto out = interp_concept(i, c.lhs());
      out.merge(interp_concept(i, c.rhs()));
      return out;
    }
    case ConceptKind::All:
    case ConceptKind::Some: {
      const auto edges = interp_role(i, c.role());
      const auto body = interp_concept(i, c.operand());
      const bool universal = c.is(ConceptKind::All);
      ElementSet out;
      for (Element x : i.domain) {
        bool all = true, some = false;
        for (auto it = edges.lower_bound({x, 0}); it != edges.end() && it->first == x; ++it) {
          const bool in = body.contains(it->second);
          all = all && in;
          some = some || in;
        }
        if (universal ? all : some) out.insert(x);
      }
      return out;
    }
  }
  return {};
}

bool is_model(const Interpretation& i, const Concept& c) { return !interp_concept(i, c).empty(); }

namespace {

Element element_of(const Interpretation& i, const Individual& x) {
  auto it = i.individual_map.find(x);
  if (it == i.individual_map.end()) throw PreconditionError("individual " + x.to_string() + " has no assignment");
  return it->second;
}

}  // namespace

bool satisfies_fact(const Interpretation& i, const Fact& f) {
  if (f.is_inst()) return interp_concept(i, f.concept_expr()).contains(element_of(i, f.subject()));
  return interp_role(i, f.role()).contains({element_of(i, f.subject()), element_of(i, f.object())});
}

bool satisfies_abox(const Interpretation& i, const AboxImpl& a) {
  return std::all_of(a.begin(), a.end(), [&](const Fact& f) { return satisfies_fact(i, f); });
}

OracleConfig OracleConfig::covering(const AboxImpl& a, std::size_t max_domain) {
  auto sig = signature_of(a);
  return {max_domain, std::move(sig.atoms), std::move(sig.roles)};
}

// ---------------------------------------------------------------------------
// Bitmask enumeration. Element e is bit e; a domain of n elements is the
// mask (1 << n) - 1. Concepts are compiled to a flat program evaluated
// children-first.

namespace {

using Mask = std::uint64_t;

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t sat_pow2(std::uint64_t bits) { return bits >= 63 ? kSaturated : std::uint64_t{1} << bits; }

std::uint64_t sat_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t k = 0; k < exp; ++k) out = sat_mul(out, base);
  return out;
}

struct Op {
  ConceptKind kind;
  std::size_t arg = 0;  // atom or role index
  std::size_t a = 0, b = 0;
};

class Program {
 public:
  Program(const std::vector<ConceptName>& atoms, const std::vector<RoleName>& roles) : atoms_(atoms), roles_(roles) {}

  std::size_t compile(const Concept& c) {
    Op op{c.kind()};
    switch (c.kind()) {
      case ConceptKind::Atom:
        op.arg = index_of(atoms_, c.name());
        break;
      case ConceptKind::Top:
      case ConceptKind::Bottom:
        break;
      case ConceptKind::Not:
        op.a = compile(c.operand());
        break;
      case ConceptKind::And:
      case ConceptKind::Or:
        op.a = compile(c.lhs());
        op.b = compile(c.rhs());
        break;
      case ConceptKind::All:
      case ConceptKind::Some:
        op.arg = index_of(roles_, c.role().atom);
        op.a = compile(c.operand());
        break;
    }
    ops_.push_back(op);
    return ops_.size() - 1;
  }

  // Evaluates every compiled node for the structure (n, concept bits, role bits).
  void run(std::size_t n, Mask concepts, Mask roles, std::vector<Mask>& out) const {
    const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    out.resize(ops_.size());
    for (std::size_t k = 0; k < ops_.size(); ++k) {
      const Op& op = ops_[k];
      switch (op.kind) {
        case ConceptKind::Top: out[k] = full; break;
        case ConceptKind::Bottom: out[k] = 0; break;
        case ConceptKind::Atom: out[k] = (concepts >> (op.arg * n)) & full; break;
        case ConceptKind::Not: out[k] = full & ~out[op.a]; break;
        case ConceptKind::And: out[k] = out[op.a] & out[op.b]; break;
        case ConceptKind::Or: out[k] = out[op.a] | out[op.b]; break;
        case ConceptKind::All:
        case ConceptKind::Some: {
          const Mask body = out[op.a];
          Mask ext = 0;
          for (std::size_t x = 0; x < n; ++x) {
            const Mask succ = (roles >> (op.arg * n * n + x * n)) & full;
            const bool in = op.kind == ConceptKind::All ? (succ & ~body) == 0 : (succ & body) != 0;
            if (in) ext |= Mask{1} << x;
          }
          out[k] = ext;
          break;
        }
      }
    }
  }

 private:
  template <typename Name>
  static std::size_t index_of(const std::vector<Name>& names, const Name& n) {
    return static_cast<std::size_t>(std::find(names.begin(), names.end(), n) - names.begin());
  }

  const std::vector<ConceptName>& atoms_;
  const std::vector<RoleName>& roles_;
  std::vector<Op> ops_;
};

template <typename Name>
std::vector<Name> dedup(std::vector<Name> names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

}  // namespace

std::uint64_t oracle_enumeration_count(const AboxImpl& a, const OracleConfig& cfg) {
  const std::size_t atoms = dedup(cfg.atoms).size();
  const std::size_t roles = dedup(cfg.roles).size();
  const std::size_t individuals = individuals_of(a).size();
  std::uint64_t total = 0;
  for (std::size_t n = 1; n <= cfg.max_domain; ++n) {
    std::uint64_t count = sat_pow2(atoms * n);
    count = sat_mul(count, sat_pow2(roles * n * n));
    count = sat_mul(count, sat_pow(n, individuals));
    total = sat_add(total, count);
  }
  return total;
}

std::optional<Interpretation> oracle_find_model(const AboxImpl& a, const OracleConfig& cfg) {
  if (cfg.max_domain < 1) throw PreconditionError("oracle max_domain must be at least 1");
  const auto atoms = dedup(cfg.atoms);
  const auto roles = dedup(cfg.roles);
  const auto sig = signature_of(a);
  for (const auto& n : sig.atoms)
    if (!std::binary_search(atoms.begin(), atoms.end(), n))
      throw OracleCoverageError("oracle config does not cover concept name " + n.name);
  for (const auto& n : sig.roles)
    if (!std::binary_search(roles.begin(), roles.end(), n))
      throw OracleCoverageError("oracle config does not cover role name " + n.name);
  if (cfg.max_domain > kOracleMaxDomain)
    throw OracleCeilingExceeded("oracle max_domain " + std::to_string(cfg.max_domain) + " exceeds " +
                                std::to_string(kOracleMaxDomain));
  const std::uint64_t count = oracle_enumeration_count(a, cfg);
  const std::size_t widest = cfg.max_domain;
  if (count > cfg.ceiling || atoms.size() * widest >= 63 || roles.size() * widest * widest >= 63)
    throw OracleCeilingExceeded("oracle would enumerate " + std::to_string(count) +
                                " interpretations, ceiling is " + std::to_string(cfg.ceiling));

  const std::set<Individual> individual_set = individuals_of(a);
  const std::vector<Individual> individuals(individual_set.begin(), individual_set.end());
  auto slot = [&](const Individual& x) {
    return static_cast<std::size_t>(std::lower_bound(individuals.begin(), individuals.end(), x) -
                                    individuals.begin());
  };

  Program program(atoms, roles);
  struct InstCheck { std::size_t who, node; };
  struct RelCheck { std::size_t role, from, to; };
  std::vector<InstCheck> insts;
  std::vector<RelCheck> rels;
  for (const auto& f : a) {
    if (f.is_inst()) {
      insts.push_back({slot(f.subject()), program.compile(f.concept_expr())});
    } else {
      const auto r = static_cast<std::size_t>(std::lower_bound(roles.begin(), roles.end(), f.role().atom) -
                                              roles.begin());
      rels.push_back({r, slot(f.subject()), slot(f.object())});
    }
  }

  std::vector<Mask> ext;
  std::vector<std::size_t> assign(individuals.size());
  for (std::size_t n = 1; n <= cfg.max_domain; ++n) {
    const std::uint64_t concept_count = std::uint64_t{1} << (atoms.size() * n);
    const std::uint64_t role_count = std::uint64_t{1} << (roles.size() * n * n);
    for (Mask cm = 0; cm < concept_count; ++cm) {
      for (Mask rm = 0; rm < role_count; ++rm) {
        program.run(n, cm, rm, ext);
        if (std::any_of(insts.begin(), insts.end(), [&](const InstCheck& c) { return ext[c.node] == 0; })) continue;
        std::fill(assign.begin(), assign.end(), 0);
        while (true) {
          const bool ok =
              std::all_of(insts.begin(), insts.end(),
                          [&](const InstCheck& c) { return (ext[c.node] >> assign[c.who]) & 1; }) &&
              std::all_of(rels.begin(), rels.end(), [&](const RelCheck& c) {
                return (rm >> (c.role * n * n + assign[c.from] * n + assign[c.to])) & 1;
              });
          if (ok) {
            Interpretation model;
            for (Element e = 0; e < n; ++e) model.domain.insert(e);
            for (std::size_t k = 0; k < atoms.size(); ++k) {
              ElementSet& s = model.concept_map[atoms[k]];
              for (Element e = 0; e < n; ++e)
                if ((cm >> (k * n + e)) & 1) s.insert(e);
            }
            for (std::size_t k = 0; k < roles.size(); ++k) {
              ElementPairs& s = model.role_map[roles[k]];
              for (Element x = 0; x < n; ++x)
                for (Element y = 0; y < n; ++y)
                  if ((rm >> (k * n * n + x * n + y)) & 1) s.insert({x, y});
            }
            for (std::size_t k = 0; k < individuals.size(); ++k)
              model.individual_map[individuals[k]] = static_cast<Element>(assign[k]);
            if (!satisfies_abox(model, a)) throw InvariantViolation("oracle witness fails the set-based evaluator");
            return model;
          }
          // Mixed-radix increment, first individual fastest.
          std::size_t k = 0;
          while (k < assign.size() && ++assign[k] == n) assign[k++] = 0;
          if (k == assign.size()) break;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace alc
