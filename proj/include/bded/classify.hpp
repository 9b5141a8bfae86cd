#pragma once

#include "bded/graph.hpp"

namespace bded {

/// Recognition report used by the solver dispatchers. Every claimed
/// property carries a verifiable witness where one makes sense.
struct ClassReport {
  bool is_forest = false;
  bool is_tree = false;
  bool is_clique = false;
  bool is_bipartite = false;
  bool is_split = false;
  std::vector<int> two_coloring;  // 0/1 per vertex when bipartite, else empty
  VertexSet split_clique;         // clique side when split, else empty
  VertexSet split_independent;    // independent side when split, else empty
};

ClassReport classify(const Graph& g);

}  // namespace bded
