#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mpflow.h"

namespace {

int fail_with(mpf_problem* p, int rc) {
  const char* msg = mpf_problem_error(p);
  std::cerr << "error (" << mpf_errcode_name(rc) << "): "
            << (msg ? msg : "unknown") << "\n";
  mpf_problem_free(p);
  return rc == MPF_EMPTY_FEASIBLE ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Pareto solver for multi-player integer network flows"};
  std::string input;
  std::string method;
  bool penalty = false;
  std::string penalty_kind = "square";
  std::vector<std::string> gammas;
  long long scale = 0;
  bool verify = false;
  bool trace = false;
  std::string output = "text";
  app.add_option("input", input, "instance JSON file")->required();
  app.add_option("--method", method, "brute or groebner");
  app.add_flag("--penalty", penalty, "fall back to the penalized problem when F is empty");
  app.add_option("--penalty-kind", penalty_kind, "square or absolute")
      ->check(CLI::IsMember({"square", "absolute"}));
  app.add_option("--gamma", gammas, "penalty parameter k=p/q (repeatable)");
  app.add_option("--scale", scale, "refine flows to accuracy 1/N")
      ->check(CLI::PositiveNumber);
  app.add_flag("--verify", verify, "run the brute-force oracles on the output");
  app.add_flag("--trace", trace, "include the restriction trace in the output");
  app.add_option("--output", output, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  CLI11_PARSE(app, argc, argv);

  std::ifstream in(input, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << input << "\n";
    return 1;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string bytes = buf.str();

  nlohmann::json overrides = nlohmann::json::object();
  if (!method.empty()) overrides["method"] = method;
  if (scale > 0) overrides["scale"] = scale;
  if (verify) overrides["verify"] = true;
  if (trace) overrides["trace"] = true;
  if (penalty) {
    nlohmann::json pj = nlohmann::json::object();
    pj["kind"] = penalty_kind;
    if (!gammas.empty()) {
      nlohmann::json gj = nlohmann::json::object();
      for (const std::string& g : gammas) {
        auto eq = g.find('=');
        if (eq == std::string::npos) {
          std::cerr << "error: --gamma expects k=p/q, got " << g << "\n";
          return 1;
        }
        gj[g.substr(0, eq)] = g.substr(eq + 1);
      }
      pj["gammas"] = gj;
    }
    overrides["penalty"] = pj;
  }

  if (penalty && penalty_kind == "square") {
    // q_k multiplies u_k+1 factors, so squaring it can dwarf the costs.
    try {
      nlohmann::json doc = nlohmann::json::parse(bytes);
      for (const auto& a : doc.value("arcs", nlohmann::json::array()))
        if (a.is_object() && a.value("capacity", 0) > 12) {
          std::cerr << "warning: capacities above 12 make square penalties "
                       "very large relative to costs; consider "
                       "--penalty-kind absolute or small --gamma values\n";
          break;
        }
    } catch (...) {
      // parse errors surface properly below
    }
  }

  mpf_problem* p = nullptr;
  int rc = mpf_problem_create(bytes.c_str(), bytes.size(), &p);
  if (rc != MPF_OK) return fail_with(p, rc);
  rc = mpf_problem_solve(p, overrides.dump().c_str());
  if (rc != MPF_OK && rc != MPF_EMPTY_FEASIBLE) return fail_with(p, rc);

  const char* text = output == "json" ? mpf_problem_output_json(p)
                                      : mpf_problem_report_text(p);
  if (text) std::cout << text << (output == "json" ? "\n" : "");
  int exit_code = 0;
  if (rc == MPF_EMPTY_FEASIBLE) {
    std::cerr << "F is empty: re-run with --penalty to get a penalized "
                 "solution over D\n";
    exit_code = 2;
  }
  mpf_problem_free(p);
  return exit_code;
}
