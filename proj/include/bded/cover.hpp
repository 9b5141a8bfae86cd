#pragma once

#include "bded/graph.hpp"

namespace bded {

/// Exact minimum vertex cover by degree branching: take a maximum-degree
/// vertex or all of its neighbors. Deterministic (smallest id breaks ties).
VertexSet min_vertex_cover(const Graph& g);

bool is_vertex_cover(const Graph& g, const VertexSet& cover);

struct TwinClass {
  VertexSet signature;  // common neighborhood, a subset of the cover
  VertexSet members;    // vertices outside the cover with that neighborhood
};

/// Vertices outside a vertex cover grouped by identical neighborhoods,
/// together with the obtainability relation: class j is obtainable from
/// class i when N(I_j) is a subset of N(I_i), at a per-vertex cost of
/// |N(I_i) \ N(I_j)| edge deletions.
struct TwinClassPartition {
  VertexSet cover;
  std::vector<TwinClass> classes;             // ordered by signature
  std::vector<std::pair<int, int>> obtainable;  // (i, j) pairs, sorted
  std::vector<int> cost;                        // aligned with `obtainable`

  bool is_obtainable(int i, int j) const;
  /// Cost of moving a vertex from class i to class j; -1 when not obtainable.
  int cost_of(int i, int j) const;
};

/// Throws InvalidArgument if `cover` misses an edge.
TwinClassPartition twin_classes(const Graph& g, const VertexSet& cover);

}  // namespace bded
