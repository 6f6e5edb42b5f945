#include "alc/rules.hpp"

#include <algorithm>

namespace alc {

std::string_view rule_name(RuleKind k) {
  switch (k) {
    case RuleKind::AndRule: return "and";
    case RuleKind::OrRule: return "or";
    case RuleKind::AllRule: return "all";
    case RuleKind::SomeRule: return "some";
  }
  return "?";
}

namespace {

bool is_inst_of(const Fact& f, ConceptKind k) { return f.is_inst() && f.concept_expr().is(k); }

template <typename Facts>
bool has(const Facts& facts, const Fact& f) {
  return std::find(facts.begin(), facts.end(), f) != facts.end();
}

template <>
bool has(const std::set<Fact>& facts, const Fact& f) {
  return facts.contains(f);
}

template <>
bool has(const AboxImpl& a, const Fact& f) {
  return a.contains(f);
}

// First y, in list order, with r(x, y) present and y : c absent.
template <typename Facts>
std::optional<Individual> first_unfilled_successor(const Facts& facts, const Individual& x, const Role& r,
                                                   const Concept& c) {
  for (const auto& f : facts)
    if (f.is_rel() && f.role() == r && f.subject() == x && !has(facts, Inst(f.object(), c))) return f.object();
  return std::nullopt;
}

template <typename Facts>
bool has_witness(const Facts& facts, const Individual& x, const Role& r, const Concept& c) {
  for (const auto& f : facts)
    if (f.is_rel() && f.role() == r && f.subject() == x && has(facts, Inst(f.object(), c))) return true;
  return false;
}

AboxImpl assemble(std::initializer_list<Fact> added, std::span<const Fact> prefix, const Fact& pivot,
                  std::span<const Fact> suffix) {
  AboxImpl out(added);
  for (const auto& f : prefix) out.insert(f);
  out.insert(pivot);
  for (const auto& f : suffix) out.insert(f);
  return out;
}

std::vector<Fact> joined(std::span<const Fact> prefix, const Fact& pivot, std::span<const Fact> suffix) {
  std::vector<Fact> all(prefix.begin(), prefix.end());
  all.push_back(pivot);
  all.insert(all.end(), suffix.begin(), suffix.end());
  return all;
}

}  // namespace

bool appcond_and(const AboxImpl& a, const Fact& f) {
  if (!is_inst_of(f, ConceptKind::And)) return false;
  const auto& c = f.concept_expr();
  return !(a.contains(Inst(f.subject(), c.lhs())) && a.contains(Inst(f.subject(), c.rhs())));
}

bool appcond_or(const AboxImpl& a, const Fact& f) {
  if (!is_inst_of(f, ConceptKind::Or)) return false;
  const auto& c = f.concept_expr();
  return !a.contains(Inst(f.subject(), c.lhs())) && !a.contains(Inst(f.subject(), c.rhs()));
}

bool appcond_all(const AboxImpl& a, const Fact& f) {
  if (!is_inst_of(f, ConceptKind::All)) return false;
  const auto& c = f.concept_expr();
  return first_unfilled_successor(a, f.subject(), c.role(), c.operand()).has_value();
}

bool appcond_some(const AboxImpl& a, const Fact& f) {
  if (!is_inst_of(f, ConceptKind::Some)) return false;
  const auto& c = f.concept_expr();
  return !has_witness(a, f.subject(), c.role(), c.operand());
}

std::vector<AboxImpl> action_and(std::span<const Fact> prefix, const Fact& pivot, std::span<const Fact> suffix) {
  if (!is_inst_of(pivot, ConceptKind::And)) return {};
  const auto& x = pivot.subject();
  const auto& c = pivot.concept_expr();
  return {assemble({Inst(x, c.lhs()), Inst(x, c.rhs())}, prefix, pivot, suffix)};
}

std::vector<AboxImpl> action_or(std::span<const Fact> prefix, const Fact& pivot, std::span<const Fact> suffix) {
  if (!is_inst_of(pivot, ConceptKind::Or)) return {};
  const auto& x = pivot.subject();
  const auto& c = pivot.concept_expr();
  return {assemble({Inst(x, c.lhs())}, prefix, pivot, suffix), assemble({Inst(x, c.rhs())}, prefix, pivot, suffix)};
}

std::vector<AboxImpl> action_all(std::span<const Fact> prefix, const Fact& pivot, std::span<const Fact> suffix) {
  if (!is_inst_of(pivot, ConceptKind::All)) return {};
  const auto& c = pivot.concept_expr();
  const auto y = first_unfilled_successor(joined(prefix, pivot, suffix), pivot.subject(), c.role(), c.operand());
  if (!y) return {};
  return {assemble({Inst(*y, c.operand())}, prefix, pivot, suffix)};
}

std::vector<AboxImpl> action_some(std::span<const Fact> prefix, const Fact& pivot, std::span<const Fact> suffix) {
  if (!is_inst_of(pivot, ConceptKind::Some)) return {};
  const auto& c = pivot.concept_expr();
  const auto all = joined(prefix, pivot, suffix);
  const Individual z = fresh_individual(std::span<const Fact>(all));
  return {assemble({Rel(c.role(), pivot.subject(), z), Inst(z, c.operand())}, prefix, pivot, suffix)};
}

SRule rule_of(RuleKind k) {
  switch (k) {
    case RuleKind::AndRule: return {k, appcond_and, action_and};
    case RuleKind::OrRule: return {k, appcond_or, action_or};
    case RuleKind::AllRule: return {k, appcond_all, action_all};
    case RuleKind::SomeRule: return {k, appcond_some, action_some};
  }
  return {k, appcond_and, action_and};
}

std::array<SRule, 4> alc_rules() {
  return {rule_of(RuleKind::AndRule), rule_of(RuleKind::AllRule), rule_of(RuleKind::OrRule),
          rule_of(RuleKind::SomeRule)};
}

std::optional<std::size_t> first_applicable(const SRule& rule, const AboxImpl& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (rule.appcond(a, a[i])) return i;
  return std::nullopt;
}

std::vector<AboxImpl> apply_srule(const SRule& rule, const AboxImpl& a) {
  const auto i = first_applicable(rule, a);
  if (!i) return {};
  const std::span<const Fact> facts(a.facts());
  return rule.action(facts.first(*i), a[*i], facts.subspan(*i + 1));
}

std::optional<RuleApplication> try_apply(const SRule& rule, const AboxImpl& a) {
  const auto i = first_applicable(rule, a);
  if (!i) return std::nullopt;
  const std::span<const Fact> facts(a.facts());
  RuleApplication app{rule.kind, a[*i], *i, a, rule.action(facts.first(*i), a[*i], facts.subspan(*i + 1)), {}};
  if (rule.kind == RuleKind::SomeRule) app.fresh = fresh_individual(a);
  return app;
}

std::set<Fact> abstract(const AboxImpl& a) { return {a.begin(), a.end()}; }

namespace {

std::set<Fact> with(const std::set<Fact>& base, std::initializer_list<Fact> added) {
  std::set<Fact> out = base;
  out.insert(added.begin(), added.end());
  return out;
}

}  // namespace

bool abstract_rule_holds(RuleKind kind, const std::set<Fact>& before, const std::set<Fact>& after) {
  for (const auto& f : before) {
    if (!f.is_inst()) continue;
    const auto& x = f.subject();
    const auto& c = f.concept_expr();
    switch (kind) {
      case RuleKind::AndRule:
        if (c.is(ConceptKind::And) && !(before.contains(Inst(x, c.lhs())) && before.contains(Inst(x, c.rhs()))) &&
            after == with(before, {Inst(x, c.lhs()), Inst(x, c.rhs())}))
          return true;
        break;
      case RuleKind::OrRule:
        if (c.is(ConceptKind::Or) && !before.contains(Inst(x, c.lhs())) && !before.contains(Inst(x, c.rhs())) &&
            (after == with(before, {Inst(x, c.lhs())}) || after == with(before, {Inst(x, c.rhs())})))
          return true;
        break;
      case RuleKind::AllRule:
        if (!c.is(ConceptKind::All)) break;
        for (const auto& e : before)
          if (e.is_rel() && e.role() == c.role() && e.subject() == x && !before.contains(Inst(e.object(), c.operand())) &&
              after == with(before, {Inst(e.object(), c.operand())}))
            return true;
        break;
      case RuleKind::SomeRule:
        if (c.is(ConceptKind::Some) && !has_witness(before, x, c.role(), c.operand())) {
          const Individual z = fresh_individual(before);
          if (after == with(before, {Rel(c.role(), x, z), Inst(z, c.operand())})) return true;
        }
        break;
    }
  }
  return false;
}

}  // namespace alc
