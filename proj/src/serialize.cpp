#include "alc/serialize.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "alc/measure.hpp"
#include "alc/syntax.hpp"

namespace alc {

namespace {

template <typename Range, typename Fn>
std::string join(const Range& items, Fn render) {
  std::string out = "[";
  bool first = true;
  for (const auto& item : items) {
    if (!first) out += ", ";
    first = false;
    out += render(item);
  }
  return out + "]";
}

nlohmann::ordered_json pairs_json(const BranchMeasure& m) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& p : sorted_pairs(m)) out.push_back({p.comp1, p.comp2});
  return out;
}

}  // namespace

std::string emit_model(const Interpretation& i) {
  auto element = [](Element e) { return std::to_string(e); };
  std::ostringstream os;
  os << "domain: " << join(i.domain, element) << '\n';
  for (const auto& [name, ext] : i.concept_map) os << "concept " << name.name << ": " << join(ext, element) << '\n';
  for (const auto& [name, ext] : i.role_map)
    os << "role " << name.name << ": "
       << join(ext, [](const auto& p) { return "(" + std::to_string(p.first) + ", " + std::to_string(p.second) + ")"; })
       << '\n';
  std::vector<std::pair<std::string, Element>> individuals;
  for (const auto& [x, e] : i.individual_map) individuals.emplace_back(x.to_string(), e);
  std::sort(individuals.begin(), individuals.end());
  for (const auto& [name, e] : individuals) os << "individual " << name << " -> " << e << '\n';
  return os.str();
}

std::vector<std::string> emit_trace(const Trace& trace) {
  std::vector<std::string> out;
  out.reserve(trace.size());
  for (const auto& s : trace) {
    const auto& app = s.application;
    nlohmann::ordered_json record;
    record["step"] = s.step;
    record["rule"] = std::string(rule_name(app.kind));
    record["pivot"] = print_fact(app.pivot);
    record["pivot_index"] = app.pivot_index;
    record["successors"] = app.successors.size();
    record["fresh"] = app.fresh ? nlohmann::ordered_json(app.fresh->to_string()) : nlohmann::ordered_json(nullptr);
    record["measure_before"] = pairs_json(measure_abox(app.before));
    auto after = nlohmann::ordered_json::array();
    for (const auto& next : app.successors) after.push_back(pairs_json(measure_abox(next)));
    record["measure_after"] = std::move(after);
    record["parent_step"] = s.origin ? nlohmann::ordered_json(s.origin->step) : nlohmann::ordered_json(nullptr);
    record["parent_successor"] = s.origin ? nlohmann::ordered_json(s.origin->successor) : nlohmann::ordered_json(nullptr);
    out.push_back(record.dump());
  }
  return out;
}

void write_trace(std::ostream& os, const Trace& trace) {
  for (const auto& line : emit_trace(trace)) os << line << '\n';
}

}  // namespace alc
