#include <doctest.h>

#include "alc/rules.hpp"
#include "alc/semantics.hpp"
#include "support/generators.hpp"

using namespace alc;

namespace {

const Individual x = Individual::named("x");
const Individual y = Individual::named("y");
const Individual z = Individual::named("z");
const Concept A = Atom("A");
const Concept B = Atom("B");
const Concept C = Atom("C");

using Facts = std::vector<Fact>;

AboxImpl random_nnf_abox(testing::Rng& rng) {
  const testing::ConceptShape shape{{"A", "B"}, {"r"}, 3, true};
  const std::vector<Individual> inds{x, y};
  AboxImpl a;
  const std::size_t n = 1 + testing::pick(rng, 3);
  for (std::size_t k = 0; k < n; ++k) {
    if (testing::pick(rng, 4) == 0)
      a.insert(Rel("r", inds[testing::pick(rng, 2)], inds[testing::pick(rng, 2)]));
    else
      a.insert(Inst(inds[testing::pick(rng, 2)], testing::random_concept(rng, shape)));
  }
  return a;
}

}  // namespace

TEST_CASE("appcond_and") {
  const Fact f = Inst(x, And(A, B));
  CHECK(appcond_and(AboxImpl{f}, f));
  CHECK_FALSE(appcond_and(AboxImpl{f, Inst(x, A), Inst(x, B)}, f));
  CHECK(appcond_and(AboxImpl{f, Inst(x, A)}, f));
  CHECK_FALSE(appcond_and(AboxImpl{f}, Rel("r", x, y)));
}

TEST_CASE("action_and") {
  const Fact p = Inst(x, And(A, B));
  CHECK(action_and(Facts{}, p, Facts{Inst(y, A)}) ==
        std::vector<AboxImpl>{{Inst(x, A), Inst(x, B), p, Inst(y, A)}});
  CHECK(action_and(Facts{Inst(z, C)}, p, Facts{}) ==
        std::vector<AboxImpl>{{Inst(x, A), Inst(x, B), Inst(z, C), p}});
  CHECK(action_and(Facts{}, Rel("r", x, y), Facts{}).empty());
  // x : A already in the prefix is not duplicated.
  CHECK(action_and(Facts{Inst(x, A)}, p, Facts{}) == std::vector<AboxImpl>{{Inst(x, A), Inst(x, B), p}});
}

TEST_CASE("appcond_or") {
  const Fact f = Inst(x, Or(A, B));
  CHECK(appcond_or(AboxImpl{f}, f));
  CHECK_FALSE(appcond_or(AboxImpl{f, Inst(x, A)}, f));
  CHECK_FALSE(appcond_or(AboxImpl{Inst(x, And(A, B))}, Inst(x, And(A, B))));
}

TEST_CASE("action_or") {
  const Fact p = Inst(x, Or(A, B));
  CHECK(action_or(Facts{}, p, Facts{}) == std::vector<AboxImpl>{{Inst(x, A), p}, {Inst(x, B), p}});
  const auto out = action_or(Facts{Inst(y, C)}, p, Facts{});
  CHECK(out == std::vector<AboxImpl>{{Inst(x, A), Inst(y, C), p}, {Inst(x, B), Inst(y, C), p}});
  const AboxImpl before{Inst(y, C), p};
  for (const auto& s : out) CHECK(abstract_rule_holds(RuleKind::OrRule, abstract(before), abstract(s)));
  CHECK(action_or(Facts{}, Rel("r", x, y), Facts{}).empty());
}

TEST_CASE("appcond_all") {
  const Fact f = Inst(x, All("r", A));
  CHECK(appcond_all(AboxImpl{f, Rel("r", x, y)}, f));
  CHECK_FALSE(appcond_all(AboxImpl{f, Rel("r", x, y), Inst(y, A)}, f));
  CHECK_FALSE(appcond_all(AboxImpl{f}, f));
  CHECK_FALSE(appcond_all(AboxImpl{f, Rel("s", x, y)}, f));
}

TEST_CASE("action_all") {
  const Fact p = Inst(x, All("r", A));
  CHECK(action_all(Facts{Rel("r", x, y)}, p, Facts{}) == std::vector<AboxImpl>{{Inst(y, A), Rel("r", x, y), p}});
  const Facts prefix{Rel("r", x, y), Inst(y, A), Rel("r", x, z)};
  const auto out = action_all(prefix, p, Facts{});
  CHECK(out == std::vector<AboxImpl>{{Inst(z, A), Rel("r", x, y), Inst(y, A), Rel("r", x, z), p}});
  AboxImpl before(prefix);
  before.insert(p);
  CHECK(abstract_rule_holds(RuleKind::AllRule, abstract(before), abstract(out.front())));
  CHECK(action_all(Facts{}, p, Facts{}).empty());
}

TEST_CASE("appcond_some") {
  const Fact f = Inst(x, Some("r", A));
  CHECK(appcond_some(AboxImpl{f}, f));
  CHECK_FALSE(appcond_some(AboxImpl{f, Rel("r", x, y), Inst(y, A)}, f));
  CHECK(appcond_some(AboxImpl{f, Rel("r", x, y)}, f));
}

TEST_CASE("action_some") {
  const Fact p = Inst(x, Some("r", A));
  const auto a0 = Individual::anon(0);
  const auto a1 = Individual::anon(1);
  CHECK(action_some(Facts{}, p, Facts{}) == std::vector<AboxImpl>{{Rel("r", x, a0), Inst(a0, A), p}});
  CHECK(action_some(Facts{Inst(a0, B)}, p, Facts{}) ==
        std::vector<AboxImpl>{{Rel("r", x, a1), Inst(a1, A), Inst(a0, B), p}});
  CHECK(action_some(Facts{}, Inst(x, All("r", A)), Facts{}).empty());
}

TEST_CASE("apply_srule picks the leftmost applicable fact") {
  const auto and_rule = rule_of(RuleKind::AndRule);
  CHECK(apply_srule(and_rule, AboxImpl{Inst(y, A), Inst(x, And(A, B))}) ==
        std::vector<AboxImpl>{{Inst(x, A), Inst(x, B), Inst(y, A), Inst(x, And(A, B))}});
  CHECK(apply_srule(and_rule, AboxImpl{Inst(x, A)}).empty());
  CHECK(apply_srule(rule_of(RuleKind::OrRule), AboxImpl{Inst(x, Or(A, B))}).size() == 2);

  const auto app = try_apply(rule_of(RuleKind::SomeRule), AboxImpl{Inst(y, A), Inst(x, Some("r", B))});
  REQUIRE(app);
  CHECK(app->pivot_index == 1);
  CHECK(app->before[app->pivot_index] == app->pivot);
  CHECK(app->fresh == Individual::anon(0));
}

TEST_CASE("alc_rules strategy order") {
  const auto rules = alc_rules();
  CHECK(rules[0].kind == RuleKind::AndRule);
  CHECK(rules[1].kind == RuleKind::AllRule);
  CHECK(rules[2].kind == RuleKind::OrRule);
  CHECK(rules[3].kind == RuleKind::SomeRule);
  const AboxImpl saturated_abox{Inst(x, And(A, B)), Inst(x, A), Inst(x, B)};
  for (const auto& r : rules) {
    CHECK_FALSE(first_applicable(r, AboxImpl{}));
    for (const auto& f : saturated_abox) CHECK_FALSE(r.appcond(saturated_abox, f));
  }
}

TEST_CASE("abstract") {
  CHECK(abstract(AboxImpl{Inst(x, A), Inst(y, B)}) == std::set<Fact>{Inst(x, A), Inst(y, B)});
  CHECK(abstract(AboxImpl{}).empty());
  CHECK(abstract(AboxImpl{Inst(x, A), Inst(y, B)}) == abstract(AboxImpl{Inst(y, B), Inst(x, A)}));
}

TEST_CASE("abstract_rule_holds") {
  const Fact f = Inst(x, And(A, B));
  CHECK(abstract_rule_holds(RuleKind::AndRule, {f}, {f, Inst(x, A), Inst(x, B)}));
  CHECK_FALSE(abstract_rule_holds(RuleKind::AndRule, {f, Inst(x, A), Inst(x, B)}, {f, Inst(x, A), Inst(x, B)}));
  const Fact g = Inst(x, Or(A, B));
  CHECK_FALSE(abstract_rule_holds(RuleKind::OrRule, {g}, {g, Inst(x, A), Inst(x, B)}));
  CHECK(abstract_rule_holds(RuleKind::OrRule, {g}, {g, Inst(x, B)}));
  const Fact h = Inst(x, Some("r", A));
  const auto a0 = Individual::anon(0);
  CHECK(abstract_rule_holds(RuleKind::SomeRule, {h}, {h, Rel("r", x, a0), Inst(a0, A)}));
  CHECK_FALSE(abstract_rule_holds(RuleKind::SomeRule, {h}, {h, Rel("r", x, y), Inst(y, A)}));
  CHECK_FALSE(abstract_rule_holds(RuleKind::AndRule, {h}, {h, Rel("r", x, a0), Inst(a0, A)}));
}

TEST_CASE("rule properties on random aboxes") {
  testing::Rng rng(31);
  std::size_t fired = 0;
  for (int k = 0; k < 600; ++k) {
    const AboxImpl a = random_nnf_abox(rng);
    for (const auto kind : {RuleKind::AndRule, RuleKind::OrRule, RuleKind::AllRule, RuleKind::SomeRule}) {
      const SRule rule = rule_of(kind);
      const auto out = apply_srule(rule, a);
      const bool any_pivot = std::any_of(a.begin(), a.end(), [&](const Fact& f) { return rule.appcond(a, f); });
      CHECK(out.empty() == !any_pivot);
      if (out.empty()) continue;
      ++fired;
      const auto before = abstract(a);
      for (const auto& s : out) {
        const auto after = abstract(s);
        CHECK(abstract_rule_holds(kind, before, after));
        CHECK(after.size() > before.size());
        CHECK(std::includes(after.begin(), after.end(), before.begin(), before.end()));
        if (kind == RuleKind::SomeRule) {
          const Individual fresh = fresh_individual(a);
          CHECK_FALSE(individuals_of(a).contains(fresh));
          const auto mentions = std::count_if(s.begin(), s.end(), [&](const Fact& f) {
            return f.subject() == fresh || (f.is_rel() && f.object() == fresh);
          });
          CHECK(mentions == 2);
        }
      }
    }
  }
  CHECK(fired > 200);
}

TEST_CASE("rules are semantically sound and complete on small aboxes") {
  testing::Rng rng(32);
  for (int k = 0; k < 60; ++k) {
    const AboxImpl a = random_nnf_abox(rng);
    for (const auto& rule : alc_rules()) {
      const auto out = apply_srule(rule, a);
      if (out.empty()) continue;
      // Soundness: a model of a successor is a model of the premise.
      for (const auto& s : out) {
        const auto m = oracle_find_model(s, OracleConfig::covering(s, 2));
        if (m) CHECK(satisfies_abox(*m, a));
      }
      // Completeness: a satisfiable premise has a satisfiable successor.
      if (oracle_find_model(a, OracleConfig::covering(a, 2))) {
        const bool some_successor = std::any_of(out.begin(), out.end(), [](const AboxImpl& s) {
          return oracle_find_model(s, OracleConfig::covering(s, 3)).has_value();
        });
        CHECK(some_successor);
      }
    }
  }
}
