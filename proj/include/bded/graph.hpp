#pragma once

#include <utility>
#include <vector>

#include "bded/rational.hpp"

namespace bded {

using VertexId = int;
/// Canonical unordered edge: first < second.
using Edge = std::pair<VertexId, VertexId>;
/// Sorted, duplicate-free vertex ids.
using VertexSet = std::vector<VertexId>;
/// Sorted, duplicate-free canonical edges.
using EdgeSet = std::vector<Edge>;

Edge make_edge(VertexId u, VertexId v);
void canonicalize(VertexSet& s);
void canonicalize(EdgeSet& s);
bool set_contains(const VertexSet& s, VertexId v);
bool set_contains(const EdgeSet& s, const Edge& e);

/// Simple undirected graph over dense 0-based vertex ids.
/// Immutable after construction; all derived graphs are new values.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n) {}
  /// Rejects out-of-range endpoints, self-loops and duplicate edges.
  Graph(int n, EdgeSet edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const EdgeSet& edges() const { return edges_; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(VertexId u, VertexId v) const;

  int min_degree() const;
  int max_degree() const;

  std::vector<int> component_ids() const;  // dense component labels
  int component_count() const;
  bool is_connected() const { return n_ <= 1 || component_count() == 1; }

  /// Same vertex set, listed edges removed (edges must exist).
  Graph without_edges(const EdgeSet& remove) const;
  /// Removes vertices and compacts ids; `old_ids`, when given, receives the
  /// original id of each surviving vertex.
  Graph without_vertices(const VertexSet& remove, std::vector<VertexId>* old_ids = nullptr) const;
  /// Induced subgraph on `keep`, ids compacted in the order of `keep`.
  Graph induced(const VertexSet& keep, std::vector<VertexId>* old_ids = nullptr) const;
  /// Number of edges with both endpoints in `keep`.
  long long induced_edge_count(const VertexSet& keep) const;

 private:
  int n_ = 0;
  EdgeSet edges_;
  std::vector<std::vector<VertexId>> adj_;
};

/// m/n in lowest terms; zero for the empty graph.
Rational density(const Graph& g);
/// m/(n-1); zero for graphs on at most one vertex.
Rational rho_prime(const Graph& g);
/// Replaces every edge by a path of length two. The result is bipartite
/// with n+m vertices and 2m edges; subdivision vertices get ids n..n+m-1
/// in canonical edge order.
Graph subdivide(const Graph& g);
/// m - n + (number of connected components).
int feedback_edge_number(const Graph& g);

struct LowDegreeResult {
  Graph reduced;
  VertexSet removed;             // original ids, sorted
  std::vector<VertexId> kept;    // original id of each vertex of `reduced`
};
/// Cascades removal of vertices with degree strictly below tau. Preserves
/// whether a subgraph denser than tau exists.
LowDegreeResult apply_low_degree_rule(const Graph& g, const Rational& tau);

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);

enum class Variant { EdgeDeletion, VertexDeletion };

/// Problem triple (G, k, tau). The budget is clamped to m (edge variant)
/// or n (vertex variant); tau must be non-negative.
struct Instance {
  Graph graph;
  int k = 0;
  Rational tau;
  Variant variant = Variant::EdgeDeletion;

  Instance() = default;
  Instance(Graph g, int budget, Rational target, Variant var);
};

}  // namespace bded
