// Acceptance gate: one criterion per invocation (argv[1] = 1..10), printing
// a single PASS/FAIL line. Golden values are frozen from independent hand
// computation over the reference tables.
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#include "fixture.hpp"
#include "mpflow/errors.hpp"
#include "mpflow/oracle.hpp"
#include "mpflow/penalty.hpp"
#include "randgen.hpp"

using namespace mpf;
using nlohmann::json;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cout << "  check failed: " << what << "\n";
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

struct FixtureRun {
  Instance inst;
  IncidenceSystem sys;
  TransformData t;
  IntVec u_perm;
  std::vector<CostExpr> costs_perm;
};

FixtureRun load_fixture() {
  FixtureRun f{testfix::transport5x16()};
  f.sys = build_incidence(f.inst.net);
  BasisOptions bopts;
  bopts.pin = f.inst.options.solve.basis_hint;
  f.t = transform(f.sys.A, f.sys.b, bopts);
  const int n = f.sys.A.cols();
  f.u_perm.resize(n);
  f.costs_perm.resize(n);
  for (int k = 0; k < n; ++k) {
    f.u_perm[k] = f.inst.net.capacities[f.t.perm[k]];
    f.costs_perm[k] = f.inst.net.costs[f.t.perm[k]];
  }
  return f;
}

const std::vector<std::vector<Int>> kGoldenD = {
    {1}, {3}, {5}, {4, 6}, {7, 11}, {10},
    {2}, {1}, {3}, {7},    {7},     {4, 5, 6, 10, 11}};

std::vector<IntVec> golden_F() {
  std::vector<IntVec> f;
  for (Int z4 : {4, 6})
    for (Int z12 : {4, 5, 6})
      f.push_back(IntVec{1, 3, 5, z4, 11, 10, 2, 1, 3, 7, 7, z12});
  std::sort(f.begin(), f.end());
  return f;
}

void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  FixtureRun f = load_fixture();
  ProductSet d = build_D(f.costs_perm, f.u_perm, 4);
  expect(d.factors.size() == 12, "twelve decoupled sets");
  for (size_t i = 0; i < d.factors.size() && i < kGoldenD.size(); ++i)
    expect(d.factors[i].values == kGoldenD[i],
           "D set " + std::to_string(i + 1));
  expect(d.cardinality() == 20, "|D| = 20");
  double secs = seconds_since(t0);
  expect(secs < 1.0, "runtime under 1 s (" + std::to_string(secs) + ")");
}

void criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  FixtureRun f = load_fixture();
  ProductSet d = build_D(f.costs_perm, f.u_perm, 4);
  auto F = brute_force_F(d, f.t.d, f.t.H, f.u_perm);
  expect(F == golden_F(), "F equals the six golden rows, lex-sorted");
  double secs = seconds_since(t0);
  expect(secs < 1.0, "runtime under 1 s (" + std::to_string(secs) + ")");
}

void criterion3() {
  FixtureRun f = load_fixture();
  Pipeline p = solve(f.inst.net, f.inst.options.solve);
  std::vector<IntVec> golden = {
      {1, 3, 5, 4, 11, 10, 2, 1, 3, 7, 7, 5, 5, 4, 5, 4},
      {1, 3, 5, 6, 11, 10, 2, 1, 3, 7, 7, 6, 3, 6, 4, 5}};
  std::sort(golden.begin(), golden.end());
  std::vector<IntVec> got = p.result.x_points;
  std::sort(got.begin(), got.end());
  expect(got == golden, "output equals exactly the two golden x-points");
  if (got != golden) {
    std::cout << "  produced " << got.size() << " points:\n";
    for (const auto& x : got) {
      std::cout << "    (";
      for (size_t i = 0; i < x.size(); ++i)
        std::cout << (i ? "," : "") << x[i].get_str();
      std::cout << ")\n";
    }
    std::cout << "  the two golden points are "
              << (std::includes(got.begin(), got.end(), golden.begin(),
                                golden.end())
                      ? "contained in"
                      : "missing from")
              << " the output\n";
  }
}

void criterion4() {
  // Reference instance first; a resource cap here downgrades the criterion
  // to the random family plus consistency agreement.
  FixtureRun f = load_fixture();
  ProductSet d = build_D(f.costs_perm, f.u_perm, 4);
  auto F_brute = brute_force_F(d, f.t.d, f.t.H, f.u_perm);
  const int nvars = 12;
  std::vector<MultiPoly> gens;
  for (int k = 0; k < 4; ++k)
    gens.push_back(build_q(nvars, f.t.d[k], f.t.H.row(k), f.u_perm[k]));
  for (int j = 0; j < nvars; ++j)
    gens.push_back(build_r(nvars, j, d.factors[j]));
  bool capped = false;
  try {
    GroebnerBasis gb = buchberger(gens, 500000);
    expect(is_consistent(gb), "reference basis is not {1}");
    expect(extract_variety(gb) == F_brute,
           "reference variety equals brute force");
  } catch (const Error& e) {
    if (e.code() != Err::resource_cap) throw;
    capped = true;
    std::cout << "  note: resource cap on the reference system; criterion "
                 "downgrades to the random family\n";
  }

  std::mt19937 rng(1009);
  int checked = 0;
  testfix::GenOptions gopts;
  gopts.max_extra_arcs = 3;  // n - m <= 3 keeps degrees tame
  while (checked < 50) {
    Network net = testfix::random_network(rng, gopts);
    IncidenceSystem sys = build_incidence(net);
    Pipeline p = solve(net);  // brute force F inside
    SolveOptions gopt;
    gopt.method = SolveOptions::Method::groebner;
    gopt.basis_hint = p.transform.basis_cols;
    Pipeline g = solve(net, gopt);
    expect(g.F == p.F, "method equivalence on random instance " +
                           std::to_string(checked));
    ++checked;
  }
  (void)capped;
}

void criterion5() {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<long> zval(-8, 8);
  int pairs = 0;
  while (pairs < 1000) {
    Network net = testfix::random_network(rng);
    IncidenceSystem sys = build_incidence(net);
    TransformData t = transform(sys.A, sys.b, {.incidence = true});
    Int det = bareiss_det(sys.A.select_columns(t.basis_cols));
    expect(det == 1 || det == -1, "det(B) = +-1");
    expect(sys.A.select_columns(t.basis_cols) * t.B_inv ==
               IntMatrix::identity(sys.A.rows()),
           "B * B_inv = I");
    IntMatrix cu = t.C * t.U;
    bool id0 = true;
    for (int i = 0; i < cu.rows(); ++i)
      for (int j = 0; j < cu.cols(); ++j)
        if (cu.at(i, j) != (i == j ? 1 : 0)) id0 = false;
    expect(id0, "C * U = [I|0]");
    const int nm = sys.A.cols() - sys.A.rows();
    for (int rep = 0; rep < 10; ++rep) {
      IntVec z(nm);
      for (auto& v : z) v = zval(rng);
      expect(sys.A * apply_transform(t, z) == sys.b, "A x(z) = b");
      ++pairs;
    }
  }
}

void criterion6() {
  std::mt19937 rng(606060);
  int solved = 0, maximal_checked = 0, trials = 0;
  while ((solved < 100 || maximal_checked < 20) && trials < 5000) {
    ++trials;
    Network net = testfix::random_network(rng);
    IncidenceSystem sys = build_incidence(net);
    Pipeline p = solve(net);
    if (p.result.empty_feasible) continue;
    std::vector<IntVec> P;
    try {
      P = enumerate_P(sys.A, sys.b, net.capacities, 100000);
    } catch (const Error& e) {
      if (e.code() == Err::cap_exceeded) continue;
      throw;
    }
    ++solved;
    const int m = sys.A.rows();
    const int n = sys.A.cols();
    for (const auto& x : p.result.x_points) {
      expect(check_pareto(x, P, net.costs).ok, "Pareto optimality");
      expect(check_nash(x, sys.A, sys.b, net.capacities, net.costs).ok,
             "Nash deviation check");
      SubsetCheck sc = check_vector_optimal_subset(x, P, net.costs);
      for (int k = m; k < n; ++k) {
        int orig = p.transform.perm[k];
        expect(std::find(sc.S.begin(), sc.S.end(), orig) != sc.S.end(),
               "free players m+1..n in the vector-optimal subset");
      }
      if (P.size() <= 1000 && maximal_checked < 20) {
        expect(sc.maximal, "subset maximality by exhaustion");
        ++maximal_checked;
      }
    }
  }
  expect(solved >= 100, "at least 100 enumerable instances solved (" +
                            std::to_string(solved) + ")");
  expect(maximal_checked >= 20, "at least 20 maximality exhaustions (" +
                                    std::to_string(maximal_checked) + ")");
}

void criterion7() {
  std::mt19937 rng(707070);
  int checked = 0, empty_seen = 0, nonempty_seen = 0;
  testfix::GenOptions gopts;
  gopts.max_extra_arcs = 3;
  while (checked < 50) {
    gopts.loose_supplies = (checked % 2 == 1);
    Network net = testfix::random_network(rng, gopts);
    Pipeline p = solve(net);  // brute-force F
    const int m = build_incidence(net).A.rows();
    const int nvars = static_cast<int>(net.arcs.size()) - m;
    std::vector<MultiPoly> gens;
    for (int k = 0; k < m; ++k)
      gens.push_back(build_q(nvars, p.transform.d[k], p.transform.H.row(k),
                             p.u_perm[k]));
    for (int j = 0; j < nvars; ++j)
      gens.push_back(build_r(nvars, j, p.D.factors[j]));
    GroebnerBasis gb = buchberger(gens, 200000);
    expect(is_consistent(gb) == !p.F.empty(),
           "consistency iff nonempty F, instance " + std::to_string(checked));
    (p.F.empty() ? empty_seen : nonempty_seen)++;
    ++checked;
  }
  expect(empty_seen > 0, "the family exercised at least one empty F");
  expect(nonempty_seen > 0, "the family exercised at least one nonempty F");
}

void criterion8() {
  // The chain property is asserted inside every run (a violation throws).
  // Exercise it across the fixture and a batch of random instances, and
  // confirm the recorded trace is monotone with nonempty stages.
  FixtureRun f = load_fixture();
  std::mt19937 rng(808080);
  int runs = 0;
  for (int trial = 0; trial < 80; ++trial) {
    Pipeline p = trial == 0 ? solve(f.inst.net, f.inst.options.solve)
                            : solve(testfix::random_network(rng));
    if (p.result.empty_feasible) continue;
    ++runs;
    size_t prev = p.F.size();
    for (const auto& step : p.result.trace) {
      expect(step.kept_points >= 1, "nonempty restriction stage");
      expect(step.kept_points <= prev, "monotone restriction chain");
      expect(!step.kept_image.empty() &&
                 step.kept_image.size() <= step.image.size(),
             "kept image inside image");
      prev = step.kept_points;
    }
    expect(p.result.z_points.size() == prev, "final stage equals the output");
  }
  expect(runs >= 30, "enough feasible runs exercised (" +
                         std::to_string(runs) + ")");
}

void criterion9() {
  // Constructed F = empty instance: 2 nodes, two parallel arcs, b = 5;
  // the free arc's cost pins z = 1 so the basis arc needs 4 > u = 2.
  Network net;
  net.node_count = 2;
  net.arcs = {{1, 2}, {1, 2}};
  net.supplies = {5, -5};
  net.capacities = {2, 4};
  net.costs = {parse_cost(json::parse(R"({"poly": [["1",1]]})")),
               parse_cost(json::parse(R"({"poly": [["1",2],["-2",1],["1",0]]})"))};
  Pipeline exact = solve(net);
  expect(exact.result.empty_feasible, "constructed instance has empty F");

  IncidenceSystem sys = build_incidence(net);
  for (auto kind : {PenaltyConfig::Kind::square, PenaltyConfig::Kind::absolute}) {
    PenaltyConfig cfg;
    cfg.kind = kind;
    Pipeline pen = solve_penalized(net, {}, cfg);
    expect(!pen.result.empty_feasible && !pen.result.x_points.empty(),
           "penalized run returns points");
    for (const auto& x : pen.result.x_points) {
      expect(sys.A * x == sys.b, "mass balance holds for penalized output");
      // the point comes from D: the free coordinate is the decoupled minimum
      expect(x[1] == 1, "penalized output stays inside D");
    }
  }

  // On the fixture (F nonempty): penalty restricted to F is exactly the
  // unpenalized cost for both kinds.
  FixtureRun f = load_fixture();
  Pipeline p = solve(f.inst.net, f.inst.options.solve);
  for (auto kind : {PenaltyConfig::Kind::square, PenaltyConfig::Kind::absolute}) {
    PenaltyConfig cfg;
    cfg.kind = kind;
    cfg.gammas.assign(4, Rat(3, 2));
    for (const auto& z : p.F)
      for (int i = 0; i < 4; ++i) {
        Rat exact_cost = eval_cost(
            p.costs_perm[i], Int(p.transform.d[i] - dot(p.transform.H.row(i), z)));
        expect(penalized_cost(i, z, p.transform, p.u_perm, p.costs_perm, cfg) ==
                   exact_cost,
               "penalized = exact on F");
      }
  }
}

void criterion10() {
  // Two parallel arcs, both costing (v - 1/2)^2: the integer problem ties at
  // {0,1} per arc, while the real optimum sits at flow 1/2 on each. At
  // alpha = 10 the solver must land exactly on the grid optimum found by an
  // independent 1/alpha grid search.
  const char* cost = R"({"poly": [["1",2],["-1",1],["1/4",0]]})";
  Network net;
  net.node_count = 2;
  net.arcs = {{1, 2}, {1, 2}};
  net.supplies = {1, -1};
  net.capacities = {1, 1};
  net.costs = {parse_cost(json::parse(cost)), parse_cost(json::parse(cost))};

  const Int alpha = 10;
  Network scaled = scale_network(net, alpha);
  Pipeline p = solve(scaled);
  expect(!p.result.empty_feasible, "scaled instance solvable");
  expect(p.result.x_points == std::vector<IntVec>{{5, 5}},
         "scaled Pareto point is (5,5)");

  // Independent grid search at step 1/alpha over x1 + x2 = 1, 0 <= xi <= 1:
  // minimize both players simultaneously (the utopian point exists here).
  auto cost_at = [&](const Rat& v) -> Rat {
    return (v - Rat(1, 2)) * (v - Rat(1, 2));
  };
  Rat best1, best2;
  bool first = true;
  std::vector<std::pair<Rat, Rat>> grid;
  for (long k = 0; k <= 10; ++k) {
    Rat x1(k, 10);
    x1.canonicalize();
    Rat x2 = 1 - x1;
    grid.emplace_back(x1, x2);
    Rat c1 = cost_at(x1), c2 = cost_at(x2);
    if (first || c1 < best1) best1 = c1;
    if (first || c2 < best2) best2 = c2;
    first = false;
  }
  std::vector<std::pair<Rat, Rat>> optima;
  for (const auto& [x1, x2] : grid)
    if (cost_at(x1) == best1 && cost_at(x2) == best2) optima.emplace_back(x1, x2);
  expect(optima.size() == 1, "grid search has a unique vector optimum");
  for (const auto& x : p.result.x_points) {
    Rat x1 = Rat(x[0]) / Rat(alpha);
    Rat x2 = Rat(x[1]) / Rat(alpha);
    x1.canonicalize();
    x2.canonicalize();
    expect(x1 == optima[0].first && x2 == optima[0].second,
           "alpha-division of the solver output matches the grid optimum");
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <criterion 1..10>\n";
    return 2;
  }
  int n = std::atoi(argv[1]);
  try {
    switch (n) {
      case 1: criterion1(); break;
      case 2: criterion2(); break;
      case 3: criterion3(); break;
      case 4: criterion4(); break;
      case 5: criterion5(); break;
      case 6: criterion6(); break;
      case 7: criterion7(); break;
      case 8: criterion8(); break;
      case 9: criterion9(); break;
      case 10: criterion10(); break;
      default:
        std::cerr << "unknown criterion " << n << "\n";
        return 2;
    }
  } catch (const std::exception& e) {
    ++failures;
    std::cout << "  unhandled error: " << e.what() << "\n";
  }
  std::cout << "criterion " << n << ": " << (failures == 0 ? "PASS" : "FAIL")
            << "\n";
  return failures == 0 ? 0 : 1;
}
