#include "bded/densest.hpp"

#include <algorithm>

#include "bded/errors.hpp"
#include "bded/flow.hpp"

namespace bded {

namespace {

// Network with one node per vertex plus source s and sink t:
//   s -> v with capacity m,
//   v -> t with capacity m + 2g - deg(v),
//   capacity 1 in both directions across each edge.
// For a source-side set S (without s) the cut capacity works out to
// m*n - 2*(e(S) - g*|S|), so a subgraph denser than g exists iff the
// minimum cut is strictly below m*n.
std::pair<bool, VertexSet> flow_decision(const Graph& g, const Rational& guess) {
  int n = g.vertex_count();
  long long m = g.edge_count();
  int source = n, sink = n + 1;
  FlowNetwork net(n + 2, source, sink);
  Rational m_rat(m);
  for (VertexId v = 0; v < n; ++v) {
    net.add_arc(source, v, m_rat);
    net.add_arc(v, sink, m_rat + Rational(2) * guess - Rational(g.degree(v)));
  }
  for (const auto& [u, v] : g.edges()) net.add_undirected(u, v, Rational(1));
  MaxFlowResult result = max_flow(net);
  Rational full(Rational::checked_mul(m, n));
  if (result.value >= full) return {false, {}};
  VertexSet witness;
  for (VertexId v : result.source_side)
    if (v < n) witness.push_back(v);
  return {true, std::move(witness)};
}

Rational witness_density(const Graph& g, const VertexSet& witness) {
  if (witness.empty()) return Rational(0);
  return Rational(g.induced_edge_count(witness), static_cast<long long>(witness.size()));
}

}  // namespace

std::pair<bool, VertexSet> exists_denser_than(const Graph& g, const Rational& tau) {
  if (tau.is_negative()) throw InvalidArgument("exists_denser_than: negative target density");
  if (g.edge_count() == 0) return {false, {}};
  auto [yes, witness] = flow_decision(g, tau);
  if (yes && !(witness_density(g, witness) > tau))
    throw Error("densest: witness does not exceed the target density");
  return {yes, std::move(witness)};
}

DensestResult rho_star_exact(const Graph& g) {
  int n = g.vertex_count();
  if (g.edge_count() == 0) return {{}, Rational(0)};
  Rational low(0);
  Rational high(n - 1, 2);
  const Rational gap(1, Rational::checked_mul(n, n - 1));
  VertexSet witness;
  while (high - low >= gap) {
    Rational mid = (low + high) / Rational(2);
    auto [yes, w] = flow_decision(g, mid);
    if (yes) {
      low = mid;
      witness = std::move(w);
    } else {
      high = mid;
    }
  }
  // rho* lies in (low, high]; densities with denominator <= n are spaced at
  // least 1/(n(n-1)) apart, so the interval holds exactly one value and the
  // witness density must equal it.
  Rational rho = witness_density(g, witness);
  std::optional<Rational> snapped;
  for (long long b = 1; b <= n; ++b) {
    Rational::Int a = (high * Rational(b)).floor();
    if (a < 0) continue;
    Rational candidate(a, b);
    if (candidate > low && candidate <= high) {
      if (snapped && *snapped != candidate) throw Error("densest: ambiguous lattice snap");
      snapped = candidate;
    }
  }
  if (!snapped || *snapped != rho) throw Error("densest: witness disagrees with lattice snap");
  return {std::move(witness), std::move(rho)};
}

DensestResult rho_star_brute(const Graph& g) {
  int n = g.vertex_count();
  if (n > 20) throw TooLarge("rho_star_brute: more than 20 vertices");
  if (g.edge_count() == 0) return {{}, Rational(0)};
  std::vector<uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  long long best_edges = 0, best_size = 1;
  uint32_t best_mask = 0;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    long long twice_edges = 0;
    for (uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      int v = __builtin_ctz(rest);
      twice_edges += __builtin_popcount(adj[v] & mask);
    }
    long long edges = twice_edges / 2;
    long long size = __builtin_popcount(mask);
    if (edges * best_size > best_edges * size) {
      best_edges = edges;
      best_size = size;
      best_mask = mask;
    }
  }
  VertexSet witness;
  for (int v = 0; v < n; ++v)
    if (best_mask & (1u << v)) witness.push_back(v);
  return {std::move(witness), Rational(best_edges, best_size)};
}

std::optional<VertexSet> find_denser_by_enumeration(const Graph& g, const Rational& tau) {
  int n = g.vertex_count();
  if (n > 20) {
    auto [yes, w] = exists_denser_than(g, tau);
    if (!yes) return std::nullopt;
    return w;
  }
  std::vector<uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  long long p = static_cast<long long>(tau.num());
  long long q = static_cast<long long>(tau.den());
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    long long twice_edges = 0;
    for (uint32_t rest = mask; rest != 0; rest &= rest - 1)
      twice_edges += __builtin_popcount(adj[__builtin_ctz(rest)] & mask);
    // density > tau  <=>  q * edges > p * |mask|
    if (q * (twice_edges / 2) > p * __builtin_popcount(mask)) {
      VertexSet witness;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1) witness.push_back(v);
      return witness;
    }
  }
  return std::nullopt;
}

std::vector<Rational> density_lattice(const Graph& g) {
  std::vector<Rational> values;
  long long m = g.edge_count();
  int n = g.vertex_count();
  for (int den = 1; den <= std::max(n, 1); ++den)
    for (long long num = 0; num <= m; ++num) values.push_back(Rational(num, den));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

}  // namespace bded
