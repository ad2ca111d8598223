#ifndef MPFLOW_ORACLE_HPP
#define MPFLOW_ORACLE_HPP

#include <optional>

#include "mpflow/linalg.hpp"
#include "mpflow/network.hpp"

namespace mpf {

/// Every x with A x = b, 0 <= x <= u, found by enumerating the z box of a
/// fresh transform and filtering the basis bounds. Complete because the
/// transform parameterizes the full solution lattice of A x = b.
/// Throws Error{cap_exceeded} when the z box has more than cap points.
std::vector<IntVec> enumerate_P(const IntMatrix& A, const IntVec& b,
                                const IntVec& u, long cap = 1000000);

struct ParetoCheck {
  bool ok = false;
  std::optional<IntVec> witness;  // a dominating point when !ok
};

/// No feasible point weakly dominates x_star with one strict improvement.
ParetoCheck check_pareto(const IntVec& x_star, const std::vector<IntVec>& P,
                         const std::vector<CostExpr>& costs);

struct SubsetCheck {
  std::vector<int> S;  // 0-based arc indices where x_star is globally optimal
  bool maximal = false;
};

/// S = { i : every feasible point has f_i at least f_i(x_star_i) }; maximal
/// iff no feasible point attains a strict superset.
SubsetCheck check_vector_optimal_subset(const IntVec& x_star,
                                        const std::vector<IntVec>& P,
                                        const std::vector<CostExpr>& costs);

struct NashCheck {
  bool ok = false;
  int deviating_player = -1;  // 0-based, when !ok
  std::optional<Int> deviation;
};

/// Unilateral integer deviations within [0, u_i]; infeasible ones cost +inf.
NashCheck check_nash(const IntVec& x_star, const IntMatrix& A, const IntVec& b,
                     const IntVec& u, const std::vector<CostExpr>& costs);

}  // namespace mpf

#endif
