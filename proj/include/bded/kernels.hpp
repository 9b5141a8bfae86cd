#pragma once

#include "bded/graph.hpp"

namespace bded {

/// Maximum cardinality matching in a general graph (blossom shrinking).
/// Deterministic: vertices and adjacency are scanned in ascending order.
EdgeSet maximum_matching(const Graph& g);

/// Lexicographically smallest maximal acyclic edge set (Kruskal order).
/// Size is always n minus the number of connected components.
EdgeSet spanning_forest(const Graph& g);

}  // namespace bded
