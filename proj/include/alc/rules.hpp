// The four ALC expansion rules as (applicability condition, action) pairs
// over list ABoxes, plus checkers for the corresponding set-level relations.

#ifndef ALC_RULES_HPP
#define ALC_RULES_HPP

#include <array>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "alc/abox.hpp"

namespace alc {

enum class RuleKind : std::uint8_t { AndRule, OrRule, AllRule, SomeRule };

std::string_view rule_name(RuleKind k);  // "and" | "or" | "all" | "some"

using AppCond = bool (*)(const AboxImpl&, const Fact&);
using Action = std::vector<AboxImpl> (*)(std::span<const Fact> prefix, const Fact& pivot,
                                         std::span<const Fact> suffix);

struct SRule {
  RuleKind kind;
  AppCond appcond;
  Action action;
};

struct RuleApplication {
  RuleKind kind;
  Fact pivot;
  std::size_t pivot_index;
  AboxImpl before;
  std::vector<AboxImpl> successors;
  std::optional<Individual> fresh;  // SomeRule only
};

bool appcond_and(const AboxImpl& a, const Fact& f);
bool appcond_or(const AboxImpl& a, const Fact& f);
bool appcond_all(const AboxImpl& a, const Fact& f);
bool appcond_some(const AboxImpl& a, const Fact& f);

// Each action builds successors shaped [added facts] ++ prefix ++ [pivot] ++ suffix,
// de-duplicated. A pivot of the wrong shape yields no successors.
std::vector<AboxImpl> action_and(std::span<const Fact> prefix, const Fact& pivot, std::span<const Fact> suffix);
std::vector<AboxImpl> action_or(std::span<const Fact> prefix, const Fact& pivot, std::span<const Fact> suffix);
// Adds y : C for the first r-successor y (in list order) still missing it.
std::vector<AboxImpl> action_all(std::span<const Fact> prefix, const Fact& pivot, std::span<const Fact> suffix);
// Adds r(x, z) and z : C for z = fresh_individual of the whole list.
std::vector<AboxImpl> action_some(std::span<const Fact> prefix, const Fact& pivot, std::span<const Fact> suffix);

SRule rule_of(RuleKind k);

// Strategy order used by the engine: And, All, Or, Some.
std::array<SRule, 4> alc_rules();

// Leftmost fact of `a` the rule applies to.
std::optional<std::size_t> first_applicable(const SRule& rule, const AboxImpl& a);

// Fires the rule on its leftmost applicable fact; [] when not applicable.
std::vector<AboxImpl> apply_srule(const SRule& rule, const AboxImpl& a);

// Same as apply_srule but keeps the bookkeeping.
std::optional<RuleApplication> try_apply(const SRule& rule, const AboxImpl& a);

std::set<Fact> abstract(const AboxImpl& a);

// Decides whether the set-level rule relation of kind `kind` relates
// `before` to `after`: some pivot in `before` meets the rule's condition and
// `after` is `before` plus exactly what the rule adds.
bool abstract_rule_holds(RuleKind kind, const std::set<Fact>& before, const std::set<Fact>& after);

}  // namespace alc

#endif  // ALC_RULES_HPP
