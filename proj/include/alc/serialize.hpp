// Text rendering of models and JSON-lines rendering of rule traces.

#ifndef ALC_SERIALIZE_HPP
#define ALC_SERIALIZE_HPP

#include <ostream>
#include <string>
#include <vector>

#include "alc/engine.hpp"
#include "alc/semantics.hpp"

namespace alc {

// Byte-deterministic:
//
//   domain: [0, 1]
//   concept A: [0]
//   role r: [(0, 1)]
//   individual x -> 0
//
// Concepts and roles sorted by name, individuals by printed name.
std::string emit_model(const Interpretation& i);

// One JSON object per rule application with fields step, rule, pivot,
// pivot_index, successors, fresh, measure_before, measure_after,
// parent_step, parent_successor. measure_after holds one pair array per
// successor; pair arrays are sorted descending.
std::vector<std::string> emit_trace(const Trace& trace);

void write_trace(std::ostream& os, const Trace& trace);

}  // namespace alc

#endif  // ALC_SERIALIZE_HPP
