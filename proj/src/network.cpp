#include "mpflow/network.hpp"

#include <numeric>

#include "mpflow/errors.hpp"

namespace mpf {

namespace {
// Union-find over node ids 0..n-1.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};
}  // namespace

const Network& validate_network(const Network& net) {
  const size_t n = net.arcs.size();
  if (net.node_count < 1) fail(Err::schema_error, "node_count must be positive");
  if (net.capacities.size() != n || net.costs.size() != n)
    fail(Err::length_mismatch, "arcs, capacities, costs must have equal length");
  if (net.supplies.size() != static_cast<size_t>(net.node_count))
    fail(Err::length_mismatch, "supplies length must equal node_count");

  for (size_t j = 0; j < n; ++j) {
    const auto& [tail, head] = net.arcs[j];
    if (tail < 1 || tail > net.node_count || head < 1 || head > net.node_count)
      fail(Err::schema_error, "arc " + std::to_string(j + 1) + " references unknown node");
    if (tail == head)
      fail(Err::self_loop, "arc " + std::to_string(j + 1) + " is a self-loop");
    if (net.capacities[j] < 0)
      fail(Err::schema_error, "arc " + std::to_string(j + 1) + " has negative capacity");
  }

  Int total = 0;
  for (const Int& s : net.supplies) total += s;
  if (total != 0)
    fail(Err::unbalanced_supply, "supplies sum to " + total.get_str());

  Dsu dsu(net.node_count);
  int components = net.node_count;
  for (const auto& [tail, head] : net.arcs)
    if (dsu.unite(tail - 1, head - 1)) --components;
  if (components != 1)
    fail(Err::disconnected_graph,
         std::to_string(components) + " components in underlying graph");

  for (size_t j = 0; j < n; ++j) check_coverage(net.costs[j], net.capacities[j]);
  return net;
}

IncidenceSystem build_incidence(const Network& net) {
  const int m1 = net.node_count;
  const int n = static_cast<int>(net.arcs.size());
  IncidenceSystem sys;
  sys.A_aug = IntMatrix(m1, n);
  for (int j = 0; j < n; ++j) {
    sys.A_aug.at(net.arcs[j].first - 1, j) = 1;
    sys.A_aug.at(net.arcs[j].second - 1, j) = -1;
  }
  sys.A = IntMatrix(m1 - 1, n);
  for (int i = 0; i < m1 - 1; ++i)
    for (int j = 0; j < n; ++j) sys.A.at(i, j) = sys.A_aug.at(i, j);
  sys.b.assign(net.supplies.begin(), net.supplies.end() - 1);
  return sys;
}

Network scale_network(const Network& net, const Int& alpha) {
  if (alpha < 1) fail(Err::schema_error, "scale factor must be >= 1");
  if (alpha == 1) return net;
  Network out = net;
  for (Int& s : out.supplies) s *= alpha;
  for (Int& u : out.capacities) u *= alpha;
  for (auto& f : out.costs) f = scale_cost(f, alpha);
  return out;
}

}  // namespace mpf
