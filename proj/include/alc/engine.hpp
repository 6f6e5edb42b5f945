// Depth-first tableau search with clash/saturation tests and canonical
// model extraction.

#ifndef ALC_ENGINE_HPP
#define ALC_ENGINE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "alc/abox.hpp"
#include "alc/rules.hpp"
#include "alc/semantics.hpp"

namespace alc {

// A list of branches.
struct Tableau {
  std::vector<AboxImpl> branches;
};

// Where a branch came from: successor `successor` of trace step `step`.
struct BranchOrigin {
  std::size_t step;
  std::size_t successor;
  friend bool operator==(const BranchOrigin&, const BranchOrigin&) = default;
};

struct TraceStep {
  std::size_t step;
  RuleApplication application;
  std::optional<BranchOrigin> origin;  // empty for the initial abox
};

using Trace = std::vector<TraceStep>;

struct MeasureViolation {
  RuleKind kind;
  AboxImpl before;
  AboxImpl after;
};

struct EngineConfig {
  std::size_t max_steps = 100000;
  bool check_measure = false;
  bool record_trace = false;
  // When check_measure is set and this is empty, a failed decrease throws
  // MeasureDecreaseViolation. Otherwise the violation is reported here and
  // the search continues. progress_check failures always throw.
  std::function<void(const MeasureViolation&)> on_measure_violation;
};

struct Satisfiable {
  Interpretation model;
  AboxImpl open_branch;
  Trace trace;
  std::optional<BranchOrigin> open_branch_origin;
  std::size_t steps = 0;
};

struct Unsatisfiable {
  Trace trace;
  std::size_t closed_branches = 0;
  std::size_t steps = 0;
};

using Verdict = std::variant<Satisfiable, Unsatisfiable>;

inline bool is_satisfiable(const Verdict& v) { return std::holds_alternative<Satisfiable>(v); }
const Trace& trace_of(const Verdict& v);

// x : Bottom, or both x : C and x : not C for any concept C.
bool contains_clash(const AboxImpl& a);

bool saturated(const AboxImpl& a);

// Successors of the first applicable rule in strategy order; nullopt when saturated.
std::optional<std::vector<AboxImpl>> expand_once(const AboxImpl& a);

// Requires every Inst concept of a0 in NNF (PreconditionError otherwise).
// Throws StepLimitExceeded past cfg.max_steps rule applications.
Verdict decide_sat_abox(const AboxImpl& a0, const EngineConfig& cfg = {});

// Decides {x0 : nnf(c)}.
Verdict decide_concept_sat(const Concept& c, const EngineConfig& cfg = {});

// c is subsumed by d: c and not d is unsatisfiable.
bool subsumes(const Concept& c, const Concept& d, const EngineConfig& cfg = {});

Individual root_individual();

// One element per individual, numbered by first occurrence; a single dummy
// element when a has no individuals.
Interpretation canonical_interpretation(const AboxImpl& a);

// If the oracle finds a model of `final_abox`, that model also satisfies
// `initial`. Vacuously true when no model exists within the bound.
bool check_run_soundness(const Trace& trace, const AboxImpl& initial, const AboxImpl& final_abox,
                         const OracleConfig& cfg);

}  // namespace alc

#endif  // ALC_ENGINE_HPP
