#ifndef MPFLOW_IO_HPP
#define MPFLOW_IO_HPP

#include <string>

#include "mpflow/penalty.hpp"

namespace mpf {

struct RunOptions {
  SolveOptions solve;
  std::optional<PenaltyConfig> penalty;
  Int scale = 1;
  bool verify = false;
  bool trace = false;
};

struct Instance {
  Network net;
  RunOptions options;
};

/// Parses the JSON instance document:
///   {
///     "nodes": 5,
///     "arcs": [{"tail":1,"head":2,"capacity":10,"cost":{...}}, ...],
///     "supplies": [9,-13,15,-11,0],
///     "options": { "method": "brute"|"groebner", "scale": 1,
///                  "verify": false, "basis_hint": [13,14,15,16],
///                  "penalty": {"kind":"square"|"absolute",
///                              "gammas": {"1":"2/3", ...}} }
///   }
/// basis_hint and gamma keys are 1-based. Throws Error{schema_error} with a
/// path, or the network/cost validation errors.
Instance parse_instance(const std::string& bytes);

nlohmann::json instance_to_json(const Instance& inst);

/// Merges CLI-level overrides (same shape as the document's "options"
/// object) over the parsed options.
void apply_options(RunOptions& opts, const nlohmann::json& overrides);

struct RunOutcome {
  Pipeline pipeline;
  bool penalized = false;
  bool empty_feasible = false;  // exact run found F empty
  nlohmann::json verification;  // filled when verify requested and feasible
};

/// Full run: scale, solve, optional penalty fallback, optional verification.
RunOutcome run_instance(const Instance& inst);

/// Canonical JSON: object keys sorted (nlohmann default), point lists
/// lex-sorted, every rational a "p/q" string.
nlohmann::json outcome_to_json(const RunOutcome& out, bool trace);

/// Report in presentation order: incidence matrix, D table, F table,
/// Pareto points.
std::string outcome_to_text(const Instance& inst, const RunOutcome& out);

}  // namespace mpf

#endif
