#include "mpflow/pareto.hpp"

#include <algorithm>
#include <set>

#include "mpflow/errors.hpp"

namespace mpf {

std::vector<Int> image_of(const std::vector<IntVec>& F, const IntVec& d,
                          const IntMatrix& H, int i) {
  std::set<Int> vals;
  for (const auto& z : F) vals.insert(d[i] - dot(H.row(i), z));
  return {vals.begin(), vals.end()};
}

std::vector<int> sort_players(const std::vector<std::vector<Int>>& images) {
  std::vector<int> order(images.size());
  for (size_t i = 0; i < images.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return images[a].size() > images[b].size();
  });
  return order;
}

RestrictionStep restrict_step(int i, const std::vector<IntVec>& F_prev,
                              const std::function<Rat(const IntVec&)>& objective,
                              const IntVec& d, const IntMatrix& H,
                              std::vector<IntVec>& F_next) {
  if (F_prev.empty()) fail(Err::internal, "restriction step on an empty set");
  RestrictionStep step;
  step.player = i + 1;
  step.image = image_of(F_prev, d, H, i);

  Rat best;
  bool first = true;
  std::vector<Rat> vals;
  vals.reserve(F_prev.size());
  for (const auto& z : F_prev) {
    Rat v = objective(z);
    if (first || v < best) { best = v; first = false; }
    vals.push_back(std::move(v));
  }
  F_next.clear();
  std::set<Int> kept;
  IntVec hrow = H.row(i);
  for (size_t k = 0; k < F_prev.size(); ++k)
    if (vals[k] == best) {
      F_next.push_back(F_prev[k]);
      kept.insert(d[i] - dot(hrow, F_prev[k]));
    }
  step.kept_image.assign(kept.begin(), kept.end());
  step.kept_points = F_next.size();
  return step;
}

IntVec assemble_x(const IntVec& z, const TransformData& t) {
  return apply_transform(t, z);
}

// Algorithm-2 core shared by the exact and penalized paths. objectives[i]
// is player i's exact cost as a function of z.
ParetoResult run_algorithm2(
    const std::vector<IntVec>& F, const TransformData& t,
    const std::vector<std::function<Rat(const IntVec&)>>& objectives,
    const std::vector<CostExpr>& costs_orig) {
  const int m = t.H.rows();
  ParetoResult res;
  if (F.empty()) {
    res.empty_feasible = true;
    return res;
  }
  std::vector<std::vector<Int>> images(m);
  for (int i = 0; i < m; ++i) images[i] = image_of(F, t.d, t.H, i);
  std::vector<int> order = sort_players(images);
  for (int i : order) res.order.push_back(i + 1);

  std::vector<IntVec> current = F;
  for (int i : order) {
    std::vector<IntVec> next;
    RestrictionStep step = restrict_step(i, current, objectives[i], t.d, t.H, next);
    if (next.empty() || next.size() > current.size())
      fail(Err::internal, "restriction chain violated");
    for (const auto& z : next)
      if (!std::binary_search(current.begin(), current.end(), z))
        fail(Err::internal, "restriction produced a point outside its parent");
    res.trace.push_back(std::move(step));
    current = std::move(next);
  }

  res.z_points = current;  // already lex-sorted: restriction preserves order
  for (const auto& z : current) {
    IntVec x = apply_transform(t, z);
    std::vector<std::optional<Rat>> row;
    for (size_t j = 0; j < x.size(); ++j) {
      try {
        row.push_back(eval_cost(costs_orig[j], x[j]));
      } catch (const Error& e) {
        if (e.code() != Err::out_of_domain) throw;
        row.push_back(std::nullopt);  // penalized output past a segment edge
      }
    }
    res.costs.push_back(std::move(row));
    res.x_points.push_back(std::move(x));
  }
  return res;
}

Pipeline solve(const IntMatrix& A, const IntVec& b, const IntVec& u,
               const std::vector<CostExpr>& costs, const SolveOptions& opts,
               bool incidence) {
  const int m = A.rows();
  const int n = A.cols();
  if (static_cast<int>(u.size()) != n || static_cast<int>(costs.size()) != n)
    fail(Err::length_mismatch, "u/costs length must equal column count");

  Pipeline p;
  BasisOptions bopts;
  bopts.incidence = incidence;
  bopts.pin = opts.basis_hint;
  p.transform = transform(A, b, bopts);

  p.u_perm.resize(n);
  p.costs_perm.resize(n);
  for (int k = 0; k < n; ++k) {
    p.u_perm[k] = u[p.transform.perm[k]];
    p.costs_perm[k] = costs[p.transform.perm[k]];
  }

  p.D = build_D(p.costs_perm, p.u_perm, m);

  if (opts.method == SolveOptions::Method::brute) {
    p.F = brute_force_F(p.D, p.transform.d, p.transform.H, p.u_perm);
  } else {
    const int nvars = n - m;
    std::vector<MultiPoly> gens;
    for (int k = 0; k < m; ++k)
      gens.push_back(
          build_q(nvars, p.transform.d[k], p.transform.H.row(k), p.u_perm[k]));
    for (int j = 0; j < nvars; ++j)
      gens.push_back(build_r(nvars, j, p.D.factors[j]));
    GroebnerBasis gb = buchberger(std::move(gens), opts.groebner_budget);
    p.F = is_consistent(gb) ? extract_variety(gb) : std::vector<IntVec>{};
  }

  std::vector<std::function<Rat(const IntVec&)>> objectives;
  for (int i = 0; i < m; ++i) {
    const CostExpr& f = p.costs_perm[i];
    IntVec hrow = p.transform.H.row(i);
    Int di = p.transform.d[i];
    objectives.push_back([f, hrow, di](const IntVec& z) {
      return eval_cost(f, Int(di - dot(hrow, z)));
    });
  }
  p.result = run_algorithm2(p.F, p.transform, objectives, costs);
  return p;
}

Pipeline solve(const Network& net, const SolveOptions& opts) {
  validate_network(net);
  IncidenceSystem sys = build_incidence(net);
  return solve(sys.A, sys.b, net.capacities, net.costs, opts, true);
}

}  // namespace mpf
