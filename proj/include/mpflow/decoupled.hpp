#ifndef MPFLOW_DECOUPLED_HPP
#define MPFLOW_DECOUPLED_HPP

#include <functional>
#include <vector>

#include "mpflow/costfn.hpp"
#include "mpflow/matrix.hpp"

namespace mpf {

/// All global minimizers of one player's decoupled univariate problem.
struct MinimizerSet {
  int player = 0;       // reindexed position m+1..n (1-based, as reported)
  std::vector<Int> values;  // ascending
  Rat optimal_value;
};

/// D = D_1 x ... x D_{n-m}, stored by factors; tuples materialize lazily.
struct ProductSet {
  std::vector<MinimizerSet> factors;

  Int cardinality() const {
    Int c = 1;
    for (const auto& f : factors) c *= static_cast<long>(f.values.size());
    return c;
  }

  /// Calls fn for each tuple in lexicographic order (first coordinate
  /// varies slowest). fn returning false stops early.
  void for_each(const std::function<bool(const IntVec&)>& fn) const;
};

/// Exhaustive exact minimization of f over the integers 0..u.
MinimizerSet minimize_univariate(const CostExpr& f, const Int& u, int player = 0);

/// One factor per reindexed player m+1..n.
ProductSet build_D(const std::vector<CostExpr>& costs, const IntVec& capacities,
                   int m);

}  // namespace mpf

#endif
