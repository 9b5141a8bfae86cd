#pragma once

#include <optional>

#include "bded/graph.hpp"
#include "bded/rational.hpp"

namespace bded {

/// Maximum subgraph density together with a vertex set achieving it.
/// The witness is empty exactly when the graph has no edges; which of
/// several densest subgraphs is returned is implementation-defined.
struct DensestResult {
  VertexSet witness;
  Rational rho_star;
};

/// Exact maximum subgraph density via binary search over flow decisions.
/// The search stops once the interval is narrower than 1/(n(n-1)) and the
/// result is snapped to the unique representable fraction inside it.
DensestResult rho_star_exact(const Graph& g);

/// Single flow decision: does some induced subgraph have density
/// strictly greater than tau? Returns a witness when the answer is yes.
std::pair<bool, VertexSet> exists_denser_than(const Graph& g, const Rational& tau);

/// Oracle: enumerates all vertex subsets. Guarded to n <= 20.
DensestResult rho_star_brute(const Graph& g);

/// Early-exit subset scan for a set denser than tau; the first qualifying
/// mask in ascending order wins. Falls back to the flow decision beyond
/// 20 vertices. Used by the brute-force oracles so their feasibility
/// checks stay off the flow path wherever enumeration is affordable.
std::optional<VertexSet> find_denser_by_enumeration(const Graph& g, const Rational& tau);

/// Sorted distinct candidate values {m'/n' : 0 <= m' <= m, 1 <= n' <= n}
/// that any subgraph density of g can take (0 included for edgeless).
std::vector<Rational> density_lattice(const Graph& g);

}  // namespace bded
