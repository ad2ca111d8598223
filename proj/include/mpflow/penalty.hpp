#ifndef MPFLOW_PENALTY_HPP
#define MPFLOW_PENALTY_HPP

#include "mpflow/pareto.hpp"

namespace mpf {

struct PenaltyConfig {
  // The two kinds keep their source names: "exact penalty" squares the
  // consensus polynomial's value, "power barrier" takes its absolute value.
  enum class Kind { square, absolute };
  Kind kind = Kind::square;
  std::vector<Rat> gammas;  // length m after normalization; default all 1
};

/// q_k evaluated through the factored product form
/// (d_k - h_k^T z)(d_k - h_k^T z - 1)...(d_k - h_k^T z - u_k).
Rat eval_q_factored(const Int& d_k, const IntVec& h_k, const Int& u_k,
                    const IntVec& z);

/// f_i(d_i - h_i^T z) + sum_k gamma_k * p(q_k(z)).
Rat penalized_cost(int i, const IntVec& z, const TransformData& t,
                   const IntVec& u_perm, const std::vector<CostExpr>& costs_perm,
                   const PenaltyConfig& config);

/// The fallback path: F := D (materialized, capped), Algorithm 2 with the
/// penalized objectives. Outputs may violate the first m flow bounds.
Pipeline solve_penalized(const IntMatrix& A, const IntVec& b, const IntVec& u,
                         const std::vector<CostExpr>& costs,
                         const SolveOptions& opts, const PenaltyConfig& config,
                         bool incidence = false);

Pipeline solve_penalized(const Network& net, const SolveOptions& opts,
                         const PenaltyConfig& config);

}  // namespace mpf

#endif
