#include "mpflow/decoupled.hpp"

#include "mpflow/errors.hpp"

namespace mpf {

MinimizerSet minimize_univariate(const CostExpr& f, const Int& u, int player) {
  if (u < 0) fail(Err::schema_error, "negative capacity");
  MinimizerSet out;
  out.player = player;
  for (Int v = 0; v <= u; ++v) {
    Rat val = eval_cost(f, v);
    if (out.values.empty() || val < out.optimal_value) {
      out.optimal_value = val;
      out.values = {v};
    } else if (val == out.optimal_value) {
      out.values.push_back(v);  // ascending by construction
    }
  }
  return out;
}

ProductSet build_D(const std::vector<CostExpr>& costs, const IntVec& capacities,
                   int m) {
  if (costs.size() != capacities.size())
    fail(Err::length_mismatch, "costs/capacities length mismatch");
  ProductSet d;
  for (size_t i = m; i < costs.size(); ++i)
    d.factors.push_back(
        minimize_univariate(costs[i], capacities[i], static_cast<int>(i) + 1));
  return d;
}

void ProductSet::for_each(const std::function<bool(const IntVec&)>& fn) const {
  const size_t k = factors.size();
  for (const auto& f : factors)
    if (f.values.empty()) return;
  if (k == 0) {
    fn(IntVec{});
    return;
  }
  std::vector<size_t> idx(k, 0);
  IntVec tuple(k);
  for (size_t i = 0; i < k; ++i) tuple[i] = factors[i].values[0];
  while (true) {
    if (!fn(tuple)) return;
    // odometer: last coordinate fastest, so tuples come out lex ascending
    size_t pos = k;
    while (true) {
      if (pos == 0) return;  // wrapped all the way around
      --pos;
      if (++idx[pos] < factors[pos].values.size()) {
        tuple[pos] = factors[pos].values[idx[pos]];
        break;
      }
      idx[pos] = 0;
      tuple[pos] = factors[pos].values[0];
    }
  }
}

}  // namespace mpf
