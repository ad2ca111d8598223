#ifndef MPFLOW_COSTFN_HPP
#define MPFLOW_COSTFN_HPP

#include <optional>
#include <vector>

#include <json.hpp>

#include "mpflow/numbers.hpp"

namespace mpf {

/// Sum of coeff*v^k terms and coeff*|v - c| terms.
struct PolyAbsBody {
  std::vector<std::pair<Rat, unsigned>> poly;  // (coefficient, exponent)
  std::vector<std::pair<Rat, Int>> abs;        // (coefficient, center)
};

struct Segment {
  std::optional<Int> lo;  // absent = -infinity
  std::optional<Int> hi;  // absent = +infinity
  PolyAbsBody body;

  bool contains(const Int& v) const {
    if (lo && v < *lo) return false;
    if (hi && v > *hi) return false;
    return true;
  }
};

/// Piecewise polynomial + absolute-value cost in one integer variable.
struct CostExpr {
  std::vector<Segment> segments;
};

/// Exact value at v. Throws Error{out_of_domain} if no segment covers v.
Rat eval_cost(const CostExpr& f, const Int& v);

/// Parses a structured cost description. Accepts either a bare body
/// {"poly": [["p/q", k], ...], "abs": [["p/q", c], ...]} (one segment over
/// all integers) or {"segments": [{"lo": .., "hi": .., "poly": .., "abs": ..}]}.
/// Throws Error{malformed_rational} or Error{overlapping_segments}.
CostExpr parse_cost(const nlohmann::json& doc);

nlohmann::json cost_to_json(const CostExpr& f);

/// Checks that every integer in [0, u] lies in exactly one segment.
/// Throws Error{gap_in_segments} (overlaps are rejected at parse time).
void check_coverage(const CostExpr& f, const Int& u);

/// Substitutes v -> v/alpha: coeff*v^k becomes (coeff/alpha^k)*v^k,
/// coeff*|v - c| becomes (coeff/alpha)*|v - alpha*c|, and a segment
/// [lo, hi] widens to [alpha*lo, alpha*hi + alpha - 1] so consecutive
/// segments stay contiguous on the scaled integer grid.
CostExpr scale_cost(const CostExpr& f, const Int& alpha);

}  // namespace mpf

#endif
