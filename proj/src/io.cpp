#include "mpflow/io.hpp"

#include <sstream>

#include "mpflow/errors.hpp"
#include "mpflow/oracle.hpp"

namespace mpf {

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
  fail(Err::schema_error, path + ": " + what);
}

long require_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_fail(path, "expected an integer");
  return j.get<long>();
}

PenaltyConfig parse_penalty(const json& j, const std::string& path) {
  PenaltyConfig cfg;
  if (!j.is_object()) schema_fail(path, "expected an object");
  if (j.contains("kind")) {
    std::string k = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
    if (k == "square") cfg.kind = PenaltyConfig::Kind::square;
    else if (k == "absolute") cfg.kind = PenaltyConfig::Kind::absolute;
    else schema_fail(path + ".kind", "expected \"square\" or \"absolute\"");
  }
  if (j.contains("gammas")) {
    if (!j["gammas"].is_object()) schema_fail(path + ".gammas", "expected an object");
    // Stored sparse here; expanded to length m at solve time.
    for (const auto& [key, val] : j["gammas"].items()) {
      size_t idx;
      try {
        idx = std::stoul(key);
      } catch (...) {
        schema_fail(path + ".gammas", "keys must be 1-based player indices");
      }
      if (idx < 1) schema_fail(path + ".gammas", "keys must be 1-based player indices");
      if (!val.is_string()) schema_fail(path + ".gammas", "values must be rational strings");
      if (cfg.gammas.size() < idx) cfg.gammas.resize(idx, Rat(1));
      cfg.gammas[idx - 1] = parse_rat(val.get<std::string>());
    }
  }
  return cfg;
}

void parse_options(const json& j, RunOptions& opts) {
  if (!j.is_object()) schema_fail("options", "expected an object");
  if (j.contains("method")) {
    std::string m = j["method"].is_string() ? j["method"].get<std::string>() : "";
    if (m == "brute") opts.solve.method = SolveOptions::Method::brute;
    else if (m == "groebner") opts.solve.method = SolveOptions::Method::groebner;
    else schema_fail("options.method", "expected \"brute\" or \"groebner\"");
  }
  if (j.contains("scale")) {
    long a = require_int(j["scale"], "options.scale");
    if (a < 1) schema_fail("options.scale", "must be >= 1");
    opts.scale = Int(a);
  }
  if (j.contains("verify")) {
    if (!j["verify"].is_boolean()) schema_fail("options.verify", "expected a boolean");
    opts.verify = j["verify"].get<bool>();
  }
  if (j.contains("trace")) {
    if (!j["trace"].is_boolean()) schema_fail("options.trace", "expected a boolean");
    opts.trace = j["trace"].get<bool>();
  }
  if (j.contains("basis_hint")) {
    if (!j["basis_hint"].is_array()) schema_fail("options.basis_hint", "expected an array");
    std::vector<int> cols;
    for (const auto& c : j["basis_hint"]) {
      long v = require_int(c, "options.basis_hint[]");
      if (v < 1) schema_fail("options.basis_hint", "columns are 1-based");
      cols.push_back(static_cast<int>(v) - 1);
    }
    opts.solve.basis_hint = cols;
  }
  if (j.contains("groebner_budget"))
    opts.solve.groebner_budget =
        require_int(j["groebner_budget"], "options.groebner_budget");
  if (j.contains("penalty"))
    opts.penalty = parse_penalty(j["penalty"], "options.penalty");
}

}  // namespace

Instance parse_instance(const std::string& bytes) {
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::exception& e) {
    fail(Err::schema_error, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_fail("$", "expected an object");
  Instance inst;
  if (!doc.contains("nodes")) schema_fail("nodes", "missing");
  inst.net.node_count = static_cast<int>(require_int(doc["nodes"], "nodes"));
  if (!doc.contains("supplies")) schema_fail("supplies", "missing");
  if (!doc["supplies"].is_array()) schema_fail("supplies", "expected an array");
  for (const auto& s : doc["supplies"])
    inst.net.supplies.emplace_back(require_int(s, "supplies[]"));
  if (!doc.contains("arcs")) schema_fail("arcs", "missing");
  if (!doc["arcs"].is_array()) schema_fail("arcs", "expected an array");
  int idx = 0;
  for (const auto& a : doc["arcs"]) {
    std::string path = "arcs[" + std::to_string(idx++) + "]";
    if (!a.is_object()) schema_fail(path, "expected an object");
    for (const char* key : {"tail", "head", "capacity", "cost"})
      if (!a.contains(key)) schema_fail(path + "." + key, "missing");
    if (a.contains("lower") || a.contains("lo"))
      schema_fail(path, "general lower bounds are not supported (fixed at 0)");
    inst.net.arcs.emplace_back(
        static_cast<int>(require_int(a["tail"], path + ".tail")),
        static_cast<int>(require_int(a["head"], path + ".head")));
    long cap = require_int(a["capacity"], path + ".capacity");
    if (cap < 0) schema_fail(path + ".capacity", "must be nonnegative");
    inst.net.capacities.emplace_back(cap);
    try {
      inst.net.costs.push_back(parse_cost(a["cost"]));
    } catch (const Error& e) {
      if (e.code() == Err::schema_error)
        fail(Err::schema_error, path + ".cost: " + e.what());
      throw;
    }
  }
  if (doc.contains("options")) parse_options(doc["options"], inst.options);
  validate_network(inst.net);
  return inst;
}

nlohmann::json instance_to_json(const Instance& inst) {
  json arcs = json::array();
  for (size_t j = 0; j < inst.net.arcs.size(); ++j)
    arcs.push_back(json{{"tail", inst.net.arcs[j].first},
                        {"head", inst.net.arcs[j].second},
                        {"capacity", inst.net.capacities[j].get_si()},
                        {"cost", cost_to_json(inst.net.costs[j])}});
  json supplies = json::array();
  for (const Int& s : inst.net.supplies) supplies.push_back(s.get_si());
  return json{{"nodes", inst.net.node_count},
              {"arcs", arcs},
              {"supplies", supplies}};
}

void apply_options(RunOptions& opts, const nlohmann::json& overrides) {
  parse_options(overrides, opts);
}

RunOutcome run_instance(const Instance& inst) {
  Network net = scale_network(inst.net, inst.options.scale);
  RunOutcome out;
  out.pipeline = solve(net, inst.options.solve);
  out.empty_feasible = out.pipeline.result.empty_feasible;
  if (out.empty_feasible && inst.options.penalty) {
    out.pipeline = solve_penalized(net, inst.options.solve, *inst.options.penalty);
    out.penalized = true;
  }
  if (inst.options.verify && !out.pipeline.result.empty_feasible &&
      !out.penalized) {
    IncidenceSystem sys = build_incidence(net);
    try {
      std::vector<IntVec> P = enumerate_P(sys.A, sys.b, net.capacities);
      json checks = json::array();
      for (const auto& x : out.pipeline.result.x_points) {
        ParetoCheck pc = check_pareto(x, P, net.costs);
        NashCheck nc = check_nash(x, sys.A, sys.b, net.capacities, net.costs);
        SubsetCheck sc = check_vector_optimal_subset(x, P, net.costs);
        json subset = json::array();
        for (int i : sc.S) subset.push_back(i + 1);
        checks.push_back(json{{"pareto", pc.ok},
                              {"nash", nc.ok},
                              {"vector_optimal_subset", subset},
                              {"subset_maximal", sc.maximal}});
      }
      out.verification =
          json{{"feasible_count", P.size()}, {"points", checks}};
    } catch (const Error& e) {
      // Enumerating the feasible set is only tractable on small instances;
      // report that the checks were skipped instead of failing the solve.
      if (e.code() != Err::cap_exceeded && e.code() != Err::resource_cap) throw;
      out.verification = json{{"skipped", e.what()}};
    }
  }
  return out;
}

namespace {

json vec_json(const IntVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(x.get_str());
  return a;
}

}  // namespace

nlohmann::json outcome_to_json(const RunOutcome& out, bool trace) {
  const Pipeline& p = out.pipeline;
  json doc;
  doc["status"] = out.pipeline.result.empty_feasible
                      ? "empty_feasible"
                      : (out.penalized ? "penalized" : "ok");
  doc["method"] = out.penalized ? "penalty" : "exact";
  json basis = json::array();
  for (int c : p.transform.basis_cols) basis.push_back(c + 1);
  doc["basis_columns"] = basis;
  json dsets = json::array();
  for (const auto& f : p.D.factors) {
    json vals = json::array();
    for (const Int& v : f.values) vals.push_back(v.get_str());
    dsets.push_back(json{{"player", f.player},
                         {"values", vals},
                         {"optimal_value", rat_string(f.optimal_value)}});
  }
  doc["d_sets"] = dsets;
  json fpts = json::array();
  for (const auto& z : p.F) fpts.push_back(vec_json(z));
  doc["f_points"] = fpts;
  if (!p.result.empty_feasible) {
    json zpts = json::array(), xpts = json::array(), costs = json::array();
    for (const auto& z : p.result.z_points) zpts.push_back(vec_json(z));
    for (const auto& x : p.result.x_points) xpts.push_back(vec_json(x));
    for (const auto& row : p.result.costs) {
      json r = json::array();
      for (const auto& c : row)
        r.push_back(c ? json(rat_string(*c)) : json(nullptr));
      costs.push_back(r);
    }
    doc["pareto"] = json{{"z_points", zpts}, {"x_points", xpts}, {"costs", costs}};
    json order = json::array();
    for (int s : p.result.order) order.push_back(s);
    doc["player_order"] = order;
    if (trace) {
      json steps = json::array();
      for (const auto& st : p.result.trace) {
        json img = json::array(), kept = json::array();
        for (const Int& v : st.image) img.push_back(v.get_str());
        for (const Int& v : st.kept_image) kept.push_back(v.get_str());
        steps.push_back(json{{"player", st.player},
                             {"image", img},
                             {"kept_image", kept},
                             {"kept_points", st.kept_points}});
      }
      doc["trace"] = steps;
    }
  }
  if (!out.verification.is_null()) doc["verification"] = out.verification;
  return doc;
}

std::string outcome_to_text(const Instance& inst, const RunOutcome& out) {
  const Pipeline& p = out.pipeline;
  std::ostringstream os;
  Network net = scale_network(inst.net, inst.options.scale);
  IncidenceSystem sys = build_incidence(net);
  os << "Augmented incidence matrix (" << sys.A_aug.rows() << " x "
     << sys.A_aug.cols() << "):\n";
  for (int i = 0; i < sys.A_aug.rows(); ++i) {
    for (int j = 0; j < sys.A_aug.cols(); ++j)
      os << (j ? " " : "  ") << sys.A_aug.at(i, j).get_str();
    os << "\n";
  }
  os << "Basis columns:";
  for (int c : p.transform.basis_cols) os << " " << (c + 1);
  os << "\n\nDecoupled minimizer sets:\n";
  for (const auto& f : p.D.factors) {
    os << "  D (player " << f.player << ") = {";
    for (size_t i = 0; i < f.values.size(); ++i)
      os << (i ? ", " : "") << f.values[i].get_str();
    os << "}  optimal value " << rat_string(f.optimal_value) << "\n";
  }
  os << "\nF (" << p.F.size() << " points):\n";
  for (const auto& z : p.F) {
    os << "  (";
    for (size_t i = 0; i < z.size(); ++i) os << (i ? "," : "") << z[i].get_str();
    os << ")\n";
  }
  if (p.result.empty_feasible) {
    os << "\nF is empty: no consensus point. Re-run with --penalty.\n";
    return os.str();
  }
  if (out.penalized)
    os << "\nPenalty run (F taken as D); first " << p.transform.H.rows()
       << " flow bounds may be violated.\n";
  os << "\nPareto points (original arc order):\n";
  for (size_t k = 0; k < p.result.x_points.size(); ++k) {
    const auto& x = p.result.x_points[k];
    os << "  x = (";
    for (size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i].get_str();
    os << ")\n    costs: (";
    for (size_t i = 0; i < p.result.costs[k].size(); ++i) {
      const auto& c = p.result.costs[k][i];
      os << (i ? "," : "") << (c ? rat_string(*c) : "NA");
    }
    os << ")\n";
  }
  return os.str();
}

}  // namespace mpf
