#pragma once

#include "bded/graph.hpp"
#include "bded/rational.hpp"

namespace bded {

/// Directed flow network with exact rational capacities.
struct FlowNetwork {
  struct Arc {
    int tail;
    int head;
    Rational capacity;
  };

  int node_count = 0;
  int source = 0;
  int sink = 0;
  std::vector<Arc> arcs;

  FlowNetwork(int nodes, int s, int t);
  void add_arc(int tail, int head, Rational capacity);
  /// One pair of arcs with capacity `cap` in each direction.
  void add_undirected(int a, int b, Rational cap);
};

struct MaxFlowResult {
  Rational value;
  VertexSet source_side;  // nodes reachable in the residual network, incl. source
};

/// Dinic's algorithm. Asserts value == capacity of the returned cut and
/// that no augmenting path remains.
MaxFlowResult max_flow(const FlowNetwork& net);

}  // namespace bded
