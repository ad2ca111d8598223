#ifndef MPFLOW_ERRORS_HPP
#define MPFLOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mpf {

enum class Err {
  // input / schema
  schema_error,
  malformed_rational,
  gap_in_segments,
  overlapping_segments,
  // network validation
  unbalanced_supply,
  disconnected_graph,
  self_loop,
  length_mismatch,
  // evaluation
  out_of_domain,
  // linear algebra
  no_unimodular_basis,
  not_unimodular,
  // resource limits
  resource_cap,
  cap_exceeded,
  // internal consistency
  non_integer_root,
  internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg),
        code_(code) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace mpf

#endif
