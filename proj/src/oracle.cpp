#include "mpflow/oracle.hpp"

#include <algorithm>

#include "mpflow/errors.hpp"

namespace mpf {

std::vector<IntVec> enumerate_P(const IntMatrix& A, const IntVec& b,
                                const IntVec& u, long cap) {
  const int m = A.rows();
  const int n = A.cols();
  TransformData t = transform(A, b);
  IntVec u_perm(n);
  for (int k = 0; k < n; ++k) u_perm[k] = u[t.perm[k]];

  Int box = 1;
  for (int i = 0; i < n - m; ++i) box *= u_perm[m + i] + 1;
  if (box > cap)
    fail(Err::cap_exceeded, "z box has " + box.get_str() + " points, cap " +
                                std::to_string(cap));

  std::vector<IntVec> out;
  IntVec z(n - m, 0);
  while (true) {
    IntVec hz = t.H * z;
    bool ok = true;
    for (int k = 0; k < m && ok; ++k) {
      Int x = t.d[k] - hz[k];
      if (x < 0 || x > u_perm[k]) ok = false;
    }
    if (ok) out.push_back(apply_transform(t, z));
    int pos = n - m;
    while (pos > 0) {
      --pos;
      if (++z[pos] <= u_perm[m + pos]) break;
      z[pos] = 0;
      if (pos == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
    if (n == m) {  // no free variables: the single z was checked above
      std::sort(out.begin(), out.end());
      return out;
    }
  }
}

ParetoCheck check_pareto(const IntVec& x_star, const std::vector<IntVec>& P,
                         const std::vector<CostExpr>& costs) {
  std::vector<Rat> base(costs.size());
  for (size_t i = 0; i < costs.size(); ++i) base[i] = eval_cost(costs[i], x_star[i]);
  for (const auto& x : P) {
    bool all_le = true, some_lt = false;
    for (size_t i = 0; i < costs.size() && all_le; ++i) {
      Rat v = eval_cost(costs[i], x[i]);
      if (v > base[i]) all_le = false;
      else if (v < base[i]) some_lt = true;
    }
    if (all_le && some_lt) return {false, x};
  }
  return {true, std::nullopt};
}

namespace {

std::vector<int> optimal_subset_of(const IntVec& x, const std::vector<IntVec>& P,
                                   const std::vector<CostExpr>& costs,
                                   const std::vector<Rat>& global_min) {
  std::vector<int> s;
  for (size_t i = 0; i < costs.size(); ++i)
    if (eval_cost(costs[i], x[i]) == global_min[i]) s.push_back(static_cast<int>(i));
  return s;
}

}  // namespace

SubsetCheck check_vector_optimal_subset(const IntVec& x_star,
                                        const std::vector<IntVec>& P,
                                        const std::vector<CostExpr>& costs) {
  // Per-arc minimum of f_i over the feasible set: membership in S is
  // equivalent to attaining it.
  std::vector<Rat> global_min(costs.size());
  for (size_t i = 0; i < costs.size(); ++i) {
    bool first = true;
    for (const auto& x : P) {
      Rat v = eval_cost(costs[i], x[i]);
      if (first || v < global_min[i]) { global_min[i] = v; first = false; }
    }
  }
  SubsetCheck out;
  out.S = optimal_subset_of(x_star, P, costs, global_min);
  out.maximal = true;
  for (const auto& x : P) {
    std::vector<int> s = optimal_subset_of(x, P, costs, global_min);
    if (s.size() <= out.S.size()) continue;
    if (std::includes(s.begin(), s.end(), out.S.begin(), out.S.end())) {
      out.maximal = false;
      break;
    }
  }
  return out;
}

NashCheck check_nash(const IntVec& x_star, const IntMatrix& A, const IntVec& b,
                     const IntVec& u, const std::vector<CostExpr>& costs) {
  const int n = A.cols();
  IntVec ax = A * x_star;
  if (ax != b) fail(Err::internal, "Nash check on an infeasible point");
  for (int i = 0; i < n; ++i) {
    Rat base = eval_cost(costs[i], x_star[i]);
    for (Int v = 0; v <= u[i]; ++v) {
      if (v == x_star[i]) continue;
      // Unilateral move: mass balance shifts by (v - x_i) * column_i.
      bool feasible = true;
      Int delta = v - x_star[i];
      for (int r = 0; r < A.rows() && feasible; ++r)
        if (A.at(r, i) * delta != 0) feasible = false;
      if (!feasible) continue;  // infeasible deviation costs +inf
      if (eval_cost(costs[i], v) < base) return {false, i, v};
    }
  }
  return {true, -1, std::nullopt};
}

}  // namespace mpf
