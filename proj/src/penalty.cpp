#include "mpflow/penalty.hpp"

#include "mpflow/errors.hpp"

namespace mpf {

Rat eval_q_factored(const Int& d_k, const IntVec& h_k, const Int& u_k,
                    const IntVec& z) {
  Int lin = d_k - dot(h_k, z);
  Int prod = 1;
  for (Int t = 0; t <= u_k; ++t) prod *= lin - t;
  return Rat(prod);
}

Rat penalized_cost(int i, const IntVec& z, const TransformData& t,
                   const IntVec& u_perm, const std::vector<CostExpr>& costs_perm,
                   const PenaltyConfig& config) {
  const int m = t.H.rows();
  if (static_cast<int>(config.gammas.size()) != m)
    fail(Err::length_mismatch, "gamma vector must have one entry per player in [m]");
  Rat total = eval_cost(costs_perm[i], Int(t.d[i] - dot(t.H.row(i), z)));
  for (int k = 0; k < m; ++k) {
    Rat q = eval_q_factored(t.d[k], t.H.row(k), u_perm[k], z);
    Rat p = config.kind == PenaltyConfig::Kind::square ? Rat(q * q)
                                                       : (q < 0 ? Rat(-q) : q);
    total += config.gammas[k] * p;
  }
  total.canonicalize();
  return total;
}

Pipeline solve_penalized(const IntMatrix& A, const IntVec& b, const IntVec& u,
                         const std::vector<CostExpr>& costs,
                         const SolveOptions& opts, const PenaltyConfig& config,
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
  if (p.D.cardinality() > opts.product_cap)
    fail(Err::cap_exceeded, "|D| = " + p.D.cardinality().get_str() +
                                " exceeds the materialization cap");
  p.D.for_each([&](const IntVec& z) {
    p.F.push_back(z);
    return true;
  });

  PenaltyConfig cfg = config;
  if (static_cast<int>(cfg.gammas.size()) > m)
    fail(Err::length_mismatch, "more penalty parameters than players in [m]");
  cfg.gammas.resize(m, Rat(1));
  for (const Rat& g : cfg.gammas)
    if (g <= 0) fail(Err::schema_error, "penalty parameters must be positive");

  std::vector<std::function<Rat(const IntVec&)>> objectives;
  for (int i = 0; i < m; ++i)
    objectives.push_back([i, &p, &cfg](const IntVec& z) {
      return penalized_cost(i, z, p.transform, p.u_perm, p.costs_perm, cfg);
    });
  p.result = run_algorithm2(p.F, p.transform, objectives, costs);
  return p;
}

Pipeline solve_penalized(const Network& net, const SolveOptions& opts,
                         const PenaltyConfig& config) {
  validate_network(net);
  IncidenceSystem sys = build_incidence(net);
  return solve_penalized(sys.A, sys.b, net.capacities, net.costs, opts, config,
                         true);
}

}  // namespace mpf
