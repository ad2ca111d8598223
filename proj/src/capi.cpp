#include "mpflow.h"

#include <new>
#include <string>

#include "mpflow/errors.hpp"
#include "mpflow/io.hpp"

struct mpf_problem {
  bool parsed = false;
  mpf::Instance instance;
  std::string error;
  std::string output_json;
  std::string report_text;
};

namespace {

int code_of(const mpf::Error& e) {
  using mpf::Err;
  switch (e.code()) {
    case Err::schema_error:
    case Err::malformed_rational:
    case Err::gap_in_segments:
    case Err::overlapping_segments:
      return MPF_EPARSE;
    case Err::unbalanced_supply:
    case Err::disconnected_graph:
    case Err::self_loop:
    case Err::length_mismatch:
    case Err::out_of_domain:
    case Err::not_unimodular:
      return MPF_EINVAL;
    case Err::no_unimodular_basis:
      return MPF_ENOBASIS;
    case Err::resource_cap:
    case Err::cap_exceeded:
      return MPF_ERESOURCE;
    default:
      return MPF_EINTERNAL;
  }
}

}  // namespace

extern "C" {

int mpf_problem_create(const char* json, size_t len, mpf_problem** out) {
  if (out) *out = nullptr;
  if (!json) return MPF_EINVAL;
  auto* p = new (std::nothrow) mpf_problem;
  if (!p) return MPF_EINTERNAL;
  int rc = MPF_OK;
  try {
    p->instance = mpf::parse_instance(std::string(json, len));
    p->parsed = true;
  } catch (const mpf::Error& e) {
    p->error = e.what();
    rc = code_of(e);
  } catch (const std::exception& e) {
    p->error = e.what();
    rc = MPF_EINTERNAL;
  }
  if (out) *out = p;
  else mpf_problem_free(p);
  return rc;
}

int mpf_problem_solve(mpf_problem* p, const char* options_json) {
  if (!p || !p->parsed) return MPF_EINVAL;
  p->error.clear();
  p->output_json.clear();
  p->report_text.clear();
  try {
    mpf::Instance inst = p->instance;
    if (options_json && *options_json) {
      nlohmann::json overrides = nlohmann::json::parse(options_json);
      mpf::apply_options(inst.options, overrides);
    }
    mpf::RunOutcome outcome = mpf::run_instance(inst);
    p->output_json = mpf::outcome_to_json(outcome, inst.options.trace).dump(2);
    p->report_text = mpf::outcome_to_text(inst, outcome);
    if (outcome.empty_feasible && !outcome.penalized) {
      p->error = "F is empty; pass a penalty configuration to proceed";
      return MPF_EMPTY_FEASIBLE;
    }
    return MPF_OK;
  } catch (const nlohmann::json::exception& e) {
    p->error = std::string("invalid options JSON: ") + e.what();
    return MPF_EPARSE;
  } catch (const mpf::Error& e) {
    p->error = e.what();
    return code_of(e);
  } catch (const std::exception& e) {
    p->error = e.what();
    return MPF_EINTERNAL;
  }
}

const char* mpf_problem_output_json(const mpf_problem* p) {
  return p && !p->output_json.empty() ? p->output_json.c_str() : nullptr;
}

const char* mpf_problem_report_text(const mpf_problem* p) {
  return p && !p->report_text.empty() ? p->report_text.c_str() : nullptr;
}

const char* mpf_problem_error(const mpf_problem* p) {
  return p && !p->error.empty() ? p->error.c_str() : nullptr;
}

void mpf_problem_free(mpf_problem* p) { delete p; }

const char* mpf_errcode_name(int code) {
  switch (code) {
    case MPF_OK: return "ok";
    case MPF_EMPTY_FEASIBLE: return "empty_feasible";
    case MPF_EPARSE: return "parse_error";
    case MPF_EINVAL: return "invalid_input";
    case MPF_ENOBASIS: return "no_unimodular_basis";
    case MPF_ERESOURCE: return "resource_cap";
    case MPF_EINTERNAL: return "internal_error";
    default: return "unknown";
  }
}

}  // extern "C"
