#ifndef MPFLOW_NETWORK_HPP
#define MPFLOW_NETWORK_HPP

#include <vector>

#include "mpflow/costfn.hpp"
#include "mpflow/matrix.hpp"

namespace mpf {

/// Directed multigraph with per-arc capacity and cost, per-node supply.
/// Nodes are 1-based; arcs keep their input order throughout the pipeline.
struct Network {
  int node_count = 0;
  std::vector<std::pair<int, int>> arcs;  // (tail, head)
  IntVec supplies;                        // length node_count
  IntVec capacities;                      // length arcs.size()
  std::vector<CostExpr> costs;            // length arcs.size()
};

struct IncidenceSystem {
  IntMatrix A_aug;  // (m+1) x n
  IntMatrix A;      // m x n, last row dropped
  IntVec b;         // length m, last supply dropped
};

/// Checks: no self-loops, balanced supplies, connected underlying graph,
/// matching lengths, nonnegative capacities, cost coverage of [0, u].
const Network& validate_network(const Network& net);

IncidenceSystem build_incidence(const Network& net);

/// Remark-style refinement: flows y of the result relate to flows x of the
/// input by x = y/alpha. Capacities and supplies multiply by alpha; each
/// cost is rewritten via scale_cost.
Network scale_network(const Network& net, const Int& alpha);

}  // namespace mpf

#endif
