#include "alc/engine.hpp"

#include <algorithm>
#include <string>

#include "alc/error.hpp"
#include "alc/measure.hpp"

namespace alc {

const Trace& trace_of(const Verdict& v) {
  return std::visit([](const auto& r) -> const Trace& { return r.trace; }, v);
}

bool contains_clash(const AboxImpl& a) {
  for (const auto& f : a) {
    if (!f.is_inst()) continue;
    const auto& c = f.concept_expr();
    if (c.is(ConceptKind::Bottom)) return true;
    if (c.is(ConceptKind::Not) && a.contains(Inst(f.subject(), c.operand()))) return true;
  }
  return false;
}

bool saturated(const AboxImpl& a) {
  const auto rules = alc_rules();
  return std::none_of(rules.begin(), rules.end(), [&](const SRule& r) { return first_applicable(r, a).has_value(); });
}

std::optional<std::vector<AboxImpl>> expand_once(const AboxImpl& a) {
  for (const auto& rule : alc_rules()) {
    auto successors = apply_srule(rule, a);
    if (!successors.empty()) return successors;
  }
  return std::nullopt;
}

namespace {

void check_step(const RuleApplication& app, const EngineConfig& cfg) {
  for (const auto& next : app.successors) {
    if (!progress_check(app.before, next))
      throw InvariantViolation(std::string("no progress after ") + std::string(rule_name(app.kind)) + " rule");
    if (assert_decrease(app.before, next)) continue;
    MeasureViolation violation{app.kind, app.before, next};
    if (!cfg.on_measure_violation)
      throw MeasureDecreaseViolation(std::string("measure did not decrease after ") +
                                     std::string(rule_name(app.kind)) + " rule");
    cfg.on_measure_violation(violation);
  }
}

}  // namespace

Verdict decide_sat_abox(const AboxImpl& a0, const EngineConfig& cfg) {
  if (!is_normal_abox(a0)) throw PreconditionError("decide_sat_abox requires every concept in negation normal form");
  if (cfg.max_steps < 1) throw PreconditionError("max_steps must be at least 1");

  struct Pending {
    AboxImpl branch;
    std::optional<BranchOrigin> origin;
  };
  std::vector<Pending> stack{{a0, std::nullopt}};
  Trace trace;
  std::size_t steps = 0;
  std::size_t closed = 0;
  const auto rules = alc_rules();

  while (!stack.empty()) {
    Pending current = std::move(stack.back());
    stack.pop_back();
    if (contains_clash(current.branch)) {
      ++closed;
      continue;
    }
    std::optional<RuleApplication> app;
    for (const auto& rule : rules)
      if ((app = try_apply(rule, current.branch))) break;
    if (!app) {
      Satisfiable sat{canonical_interpretation(current.branch), std::move(current.branch), std::move(trace),
                      current.origin, steps};
      return sat;
    }
    if (++steps > cfg.max_steps)
      throw StepLimitExceeded("more than " + std::to_string(cfg.max_steps) + " rule applications");
    if (cfg.check_measure) check_step(*app, cfg);
    const std::size_t step = steps - 1;
    // Reverse push so the first successor is explored first.
    for (std::size_t k = app->successors.size(); k-- > 0;)
      stack.push_back({app->successors[k], BranchOrigin{step, k}});
    if (cfg.record_trace) trace.push_back({step, std::move(*app), current.origin});
  }
  return Unsatisfiable{std::move(trace), closed, steps};
}

Individual root_individual() { return Individual::named("x0"); }

Verdict decide_concept_sat(const Concept& c, const EngineConfig& cfg) {
  return decide_sat_abox(AboxImpl{Inst(root_individual(), nnf(c))}, cfg);
}

bool subsumes(const Concept& c, const Concept& d, const EngineConfig& cfg) {
  return !is_satisfiable(decide_concept_sat(And(c, Not(d)), cfg));
}

Interpretation canonical_interpretation(const AboxImpl& a) {
  Interpretation i;
  const auto order = individuals_in_order(a);
  for (std::size_t k = 0; k < order.size(); ++k) {
    i.domain.insert(static_cast<Element>(k));
    i.individual_map.emplace(order[k], static_cast<Element>(k));
  }
  if (order.empty()) i.domain.insert(0);
  for (const auto& f : a) {
    if (f.is_inst()) {
      if (f.concept_expr().is(ConceptKind::Atom)) i.concept_map[f.concept_expr().name()].insert(i.individual_map.at(f.subject()));
    } else {
      i.role_map[f.role().atom].insert({i.individual_map.at(f.subject()), i.individual_map.at(f.object())});
    }
  }
  return i;
}

bool check_run_soundness(const Trace& trace, const AboxImpl& initial, const AboxImpl& final_abox,
                         const OracleConfig& cfg) {
  // Every step only adds facts, so soundness composes along the run.
  for (const auto& s : trace) {
    const auto before = abstract(s.application.before);
    for (const auto& next : s.application.successors) {
      const auto after = abstract(next);
      if (!std::includes(after.begin(), after.end(), before.begin(), before.end())) return false;
    }
  }
  const auto model = oracle_find_model(final_abox, cfg);
  return !model || satisfies_abox(*model, initial);
}

}  // namespace alc
