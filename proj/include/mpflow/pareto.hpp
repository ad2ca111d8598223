#ifndef MPFLOW_PARETO_HPP
#define MPFLOW_PARETO_HPP

#include <functional>
#include <optional>

#include "mpflow/linalg.hpp"
#include "mpflow/network.hpp"
#include "mpflow/poly.hpp"

namespace mpf {

struct RestrictionStep {
  int player = 0;                 // reindexed 1-based position s_i
  std::vector<Int> image;         // X_{s_i} over the incoming set, ascending
  std::vector<Int> kept_image;    // X*_{s_i}
  size_t kept_points = 0;         // |F*_{s_i}|
};

struct ParetoResult {
  bool empty_feasible = false;
  std::vector<IntVec> z_points;              // F*_{s_m}, lex-sorted
  std::vector<IntVec> x_points;              // original arc indexing
  std::vector<std::vector<std::optional<Rat>>> costs;  // per point, per arc
  std::vector<int> order;                    // s_1..s_m, reindexed 1-based
  std::vector<RestrictionStep> trace;
};

struct SolveOptions {
  enum class Method { brute, groebner };
  Method method = Method::brute;
  std::optional<std::vector<int>> basis_hint;  // 0-based columns
  long groebner_budget = 200000;
  long product_cap = 2000000;  // materialized-set ceiling (penalty path)
};

/// Everything the pipeline produced, for reports and cross-checks.
struct Pipeline {
  TransformData transform;
  IntVec u_perm;                   // capacities in the reindexed frame
  std::vector<CostExpr> costs_perm;
  ProductSet D;
  std::vector<IntVec> F;
  ParetoResult result;
};

std::vector<Int> image_of(const std::vector<IntVec>& F, const IntVec& d,
                          const IntMatrix& H, int i);

/// Player order: descending image cardinality, ties by ascending index.
/// Indices in and out are 0-based rows of H.
std::vector<int> sort_players(const std::vector<std::vector<Int>>& images);

/// One Algorithm-2 step. objective maps a point of F_prev to the player's
/// exact cost; for the unpenalized problem it factors through the image
/// x_{s_i} = d_i - h_i^T z, so keeping the preimages of the argmin image
/// values and keeping the argmin z's coincide.
RestrictionStep restrict_step(int i, const std::vector<IntVec>& F_prev,
                              const std::function<Rat(const IntVec&)>& objective,
                              const IntVec& d, const IntMatrix& H,
                              std::vector<IntVec>& F_next);

IntVec assemble_x(const IntVec& z, const TransformData& t);

/// Algorithm-2 core over a precomputed set F. objectives[i] is the exact
/// cost of reindexed player i+1 as a function of z; costs_orig evaluates the
/// per-arc cost columns of the output points (original indexing).
ParetoResult run_algorithm2(
    const std::vector<IntVec>& F, const TransformData& t,
    const std::vector<std::function<Rat(const IntVec&)>>& objectives,
    const std::vector<CostExpr>& costs_orig);

/// Full pipeline on a raw system. u and costs use ORIGINAL column indexing.
Pipeline solve(const IntMatrix& A, const IntVec& b, const IntVec& u,
               const std::vector<CostExpr>& costs, const SolveOptions& opts = {},
               bool incidence = false);

Pipeline solve(const Network& net, const SolveOptions& opts = {});

}  // namespace mpf

#endif
