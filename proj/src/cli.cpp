#include "alc/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "alc/engine.hpp"
#include "alc/serialize.hpp"
#include "alc/syntax.hpp"

namespace alc {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::string trace_path;
  bool check_measure = false;
  std::size_t max_steps = 100000;
  bool model = false;
  std::string file;
  std::string concept_text;
  std::string lhs, rhs;
  std::size_t max_domain = 0;
};

EngineConfig engine_config(const Options& o) {
  EngineConfig cfg;
  cfg.max_steps = o.max_steps;
  cfg.check_measure = o.check_measure;
  cfg.record_trace = !o.trace_path.empty();
  return cfg;
}

void maybe_write_trace(const Options& o, const Verdict& v) {
  if (o.trace_path.empty()) return;
  std::ofstream os(o.trace_path, std::ios::binary);
  if (!os) throw UsageError("cannot write " + o.trace_path);
  write_trace(os, trace_of(v));
}

int report(const Options& o, const Verdict& v, const char* yes, const char* no, std::ostream& out) {
  maybe_write_trace(o, v);
  if (const auto* sat = std::get_if<Satisfiable>(&v)) {
    out << yes << '\n';
    if (o.model) out << emit_model(sat->model);
    return kExitYes;
  }
  out << no << '\n';
  return kExitNo;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"ALC tableau reasoner", "alc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--trace", o.trace_path, "Write the rule trace (JSON lines) to PATH");
  app.add_flag("--check-measure", o.check_measure, "Fail if the termination measure does not decrease");
  app.add_option("--max-steps", o.max_steps, "Rule application limit")->check(CLI::PositiveNumber);

  auto* sat = app.add_subcommand("sat", "Decide concept satisfiability");
  sat->add_option("concept", o.concept_text, "Concept text");
  auto* sat_file = sat->add_option("--file", o.file, "Read the concept from PATH");
  sat->add_flag("--model", o.model, "Print the model when satisfiable");

  auto* consistent = app.add_subcommand("consistent", "Decide ABox consistency");
  consistent->add_option("--file", o.file, "ABox file")->required();
  consistent->add_flag("--model", o.model, "Print the model when consistent");

  auto* subsumes_cmd = app.add_subcommand("subsumes", "Decide whether C is subsumed by D");
  subsumes_cmd->add_option("C", o.lhs)->required();
  subsumes_cmd->add_option("D", o.rhs)->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force model search over bounded domains");
  oracle->add_option("--file", o.file, "ABox file")->required();
  oracle->add_option("--max-domain", o.max_domain, "Largest domain size")->required()->check(CLI::PositiveNumber);
  oracle->add_flag("--model", o.model, "Print the model when found");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (sat->parsed()) {
      if (sat_file->count() > 0 && !o.concept_text.empty()) throw UsageError("give either a concept or --file");
      if (sat_file->count() == 0 && o.concept_text.empty()) throw UsageError("sat needs a concept or --file");
      const Concept c = parse_concept(sat_file->count() > 0 ? read_file(o.file) : o.concept_text);
      return report(o, decide_concept_sat(c, engine_config(o)), "SAT", "UNSAT", out);
    }
    if (consistent->parsed()) {
      const AboxImpl a = nnf_abox(parse_abox(read_file(o.file)));
      return report(o, decide_sat_abox(a, engine_config(o)), "CONSISTENT", "INCONSISTENT", out);
    }
    if (subsumes_cmd->parsed()) {
      const Concept c = parse_concept(o.lhs);
      const Concept d = parse_concept(o.rhs);
      return report(o, decide_concept_sat(And(c, Not(d)), engine_config(o)), "NO", "YES", out) == kExitYes
                 ? kExitNo
                 : kExitYes;
    }
    if (oracle->parsed()) {
      const AboxImpl a = parse_abox(read_file(o.file));
      const auto model = oracle_find_model(a, OracleConfig::covering(a, o.max_domain));
      if (!model) {
        out << "UNSAT\n";
        return kExitNo;
      }
      out << "SAT\n";
      if (o.model) out << emit_model(*model);
      return kExitYes;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const StepLimitExceeded& e) {
    err << "step limit: " << e.what() << '\n';
    return kExitLimit;
  } catch (const OracleCeilingExceeded& e) {
    err << "oracle ceiling: " << e.what() << '\n';
    return kExitLimit;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitUsage;
}

}  // namespace alc
