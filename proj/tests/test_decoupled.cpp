#include <doctest.h>

#include "fixture.hpp"
#include "mpflow/decoupled.hpp"
#include "mpflow/linalg.hpp"

using namespace mpf;
using nlohmann::json;

TEST_CASE("univariate minimization") {
  CostExpr sq = parse_cost(json::parse(R"({"poly": [["1",2],["-2",1],["1",0]]})"));
  MinimizerSet s = minimize_univariate(sq, 10);
  CHECK(s.values == std::vector<Int>{1});
  CHECK(s.optimal_value == 0);

  CostExpr ab = parse_cost(json::parse(R"({"abs": [["1",7]]})"));
  s = minimize_univariate(ab, 13);
  CHECK(s.values == std::vector<Int>{7});

  // Capacity below the unconstrained minimizer: boundary wins.
  s = minimize_univariate(ab, 4);
  CHECK(s.values == std::vector<Int>{4});

  // Plateau: every point of a flat segment minimizes.
  CostExpr pw = parse_cost(json::parse(R"({"segments": [
    {"lo":0,"hi":1,"poly":[["3",0]]},{"lo":2,"hi":5,"poly":[["1",0]]}]})"));
  s = minimize_univariate(pw, 5);
  CHECK(s.values == std::vector<Int>{2, 3, 4, 5});
  CHECK(s.optimal_value == 1);
}

TEST_CASE("fixture D-sets match the golden table") {
  Instance inst = testfix::transport5x16();
  IncidenceSystem sys = build_incidence(inst.net);
  BasisOptions bopts;
  bopts.pin = inst.options.solve.basis_hint;
  TransformData t = transform(sys.A, sys.b, bopts);

  std::vector<CostExpr> costs_perm(16);
  IntVec u_perm(16);
  for (int k = 0; k < 16; ++k) {
    costs_perm[k] = inst.net.costs[t.perm[k]];
    u_perm[k] = inst.net.capacities[t.perm[k]];
  }
  ProductSet d = build_D(costs_perm, u_perm, 4);
  REQUIRE(d.factors.size() == 12);
  std::vector<std::vector<Int>> expected = {
      {1}, {3}, {5}, {4, 6}, {7, 11}, {10},
      {2}, {1}, {3}, {7},    {7},     {4, 5, 6, 10, 11}};
  for (int i = 0; i < 12; ++i) CHECK(d.factors[i].values == expected[i]);
  CHECK(d.cardinality() == 20);
}

TEST_CASE("product iteration is lex ascending and lazy-stoppable") {
  ProductSet d;
  d.factors.push_back(MinimizerSet{1, {0, 1}, 0});
  d.factors.push_back(MinimizerSet{2, {5, 7}, 0});
  std::vector<IntVec> seen;
  d.for_each([&](const IntVec& z) {
    seen.push_back(z);
    return true;
  });
  CHECK(seen == std::vector<IntVec>{{0, 5}, {0, 7}, {1, 5}, {1, 7}});

  int count = 0;
  d.for_each([&](const IntVec&) { return ++count < 2; });
  CHECK(count == 2);
}
