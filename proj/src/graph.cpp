#include "bded/graph.hpp"

#include <algorithm>
#include <numeric>

#include "bded/errors.hpp"

namespace bded {

Edge make_edge(VertexId u, VertexId v) {
  if (u == v) throw InvalidArgument("graph: self-loop {" + std::to_string(u) + "}");
  return u < v ? Edge{u, v} : Edge{v, u};
}

void canonicalize(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

void canonicalize(EdgeSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

bool set_contains(const VertexSet& s, VertexId v) {
  return std::binary_search(s.begin(), s.end(), v);
}

bool set_contains(const EdgeSet& s, const Edge& e) {
  return std::binary_search(s.begin(), s.end(), e);
}

Graph::Graph(int n, EdgeSet edges) : n_(n), adj_(n) {
  if (n < 0) throw InvalidArgument("graph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u == v) throw InvalidArgument("graph: self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) throw InvalidArgument("graph: endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw InvalidArgument("graph: duplicate edge");
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u == v) return false;
  const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  VertexId other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(nb.begin(), nb.end(), other);
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : n_;
  for (VertexId v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (VertexId v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<int> Graph::component_ids() const {
  std::vector<int> comp(n_, -1);
  int next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n_; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : adj_[v]) {
        if (comp[w] == -1) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

int Graph::component_count() const {
  auto comp = component_ids();
  return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

Graph Graph::without_edges(const EdgeSet& remove) const {
  EdgeSet rm = remove;
  canonicalize(rm);
  for (const auto& e : rm) {
    if (!set_contains(edges_, e))
      throw InvalidArgument("graph: cannot remove missing edge");
  }
  EdgeSet kept;
  kept.reserve(edges_.size() - rm.size());
  std::set_difference(edges_.begin(), edges_.end(), rm.begin(), rm.end(),
                      std::back_inserter(kept));
  return Graph(n_, std::move(kept));
}

Graph Graph::without_vertices(const VertexSet& remove, std::vector<VertexId>* old_ids) const {
  VertexSet rm = remove;
  canonicalize(rm);
  VertexSet keep;
  keep.reserve(n_ - rm.size());
  for (VertexId v = 0; v < n_; ++v)
    if (!set_contains(rm, v)) keep.push_back(v);
  return induced(keep, old_ids);
}

Graph Graph::induced(const VertexSet& keep, std::vector<VertexId>* old_ids) const {
  std::vector<int> new_id(n_, -1);
  for (size_t i = 0; i < keep.size(); ++i) {
    VertexId v = keep[i];
    if (v < 0 || v >= n_) throw InvalidArgument("graph: induced vertex out of range");
    if (new_id[v] != -1) throw InvalidArgument("graph: induced vertex repeated");
    new_id[v] = static_cast<int>(i);
  }
  EdgeSet sub;
  for (const auto& [u, v] : edges_)
    if (new_id[u] != -1 && new_id[v] != -1)
      sub.push_back(make_edge(new_id[u], new_id[v]));
  if (old_ids) *old_ids = keep;
  canonicalize(sub);
  return Graph(static_cast<int>(keep.size()), std::move(sub));
}

long long Graph::induced_edge_count(const VertexSet& keep) const {
  long long count = 0;
  for (const auto& [u, v] : edges_)
    if (set_contains(keep, u) && set_contains(keep, v)) ++count;
  return count;
}

Rational density(const Graph& g) {
  if (g.vertex_count() == 0) return Rational(0);
  return Rational(g.edge_count(), g.vertex_count());
}

Rational rho_prime(const Graph& g) {
  if (g.vertex_count() <= 1) return Rational(0);
  return Rational(g.edge_count(), g.vertex_count() - 1);
}

Graph subdivide(const Graph& g) {
  int n = g.vertex_count();
  EdgeSet out;
  out.reserve(2 * g.edges().size());
  int next = n;
  for (const auto& [u, v] : g.edges()) {
    out.push_back(make_edge(u, next));
    out.push_back(make_edge(v, next));
    ++next;
  }
  canonicalize(out);
  return Graph(next, std::move(out));
}

int feedback_edge_number(const Graph& g) {
  return g.edge_count() - g.vertex_count() + g.component_count();
}

LowDegreeResult apply_low_degree_rule(const Graph& g, const Rational& tau) {
  int n = g.vertex_count();
  std::vector<int> deg(n);
  std::vector<char> gone(n, 0);
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (Rational(deg[v]) < tau) {
      gone[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    VertexId v = queue.back();
    queue.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (gone[w]) continue;
      if (Rational(--deg[w]) < tau) {
        gone[w] = 1;
        queue.push_back(w);
      }
    }
  }
  LowDegreeResult result;
  VertexSet keep;
  for (VertexId v = 0; v < n; ++v) {
    if (gone[v])
      result.removed.push_back(v);
    else
      keep.push_back(v);
  }
  result.reduced = g.induced(keep, &result.kept);
  return result;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  EdgeSet edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  EdgeSet edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("cycle_graph: need at least 3 vertices");
  EdgeSet edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, n - 1});
  canonicalize(edges);
  return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
  EdgeSet edges;
  for (int v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  EdgeSet edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
  return Graph(a + b, std::move(edges));
}

Instance::Instance(Graph g, int budget, Rational target, Variant var)
    : graph(std::move(g)), k(budget), tau(std::move(target)), variant(var) {
  if (tau.is_negative()) throw InvalidArgument("instance: negative target density");
  if (k < 0) throw InvalidArgument("instance: negative budget");
  int cap = variant == Variant::EdgeDeletion ? graph.edge_count() : graph.vertex_count();
  k = std::min(k, cap);
}

}  // namespace bded
