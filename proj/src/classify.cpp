#include "bded/classify.hpp"

#include <algorithm>
#include <numeric>

#include "bded/errors.hpp"

namespace bded {

namespace {

bool acyclic(const Graph& g) {
  // Union-find cycle check.
  int n = g.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [u, v] : g.edges()) {
    int a = find(u), b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool two_color(const Graph& g, std::vector<int>& color) {
  int n = g.vertex_count();
  color.assign(n, -1);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Hammer-Simeone degree-sequence split test; witness built from the
// degree order and verified before being reported.
bool split_partition(const Graph& g, VertexSet& clique, VertexSet& independent) {
  int n = g.vertex_count();
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  long long omega = 0;
  for (int i = 0; i < n; ++i)
    if (g.degree(order[i]) >= i) omega = i + 1;
  long long head = 0, tail = 0;
  for (int i = 0; i < n; ++i) {
    if (i < omega)
      head += g.degree(order[i]);
    else
      tail += g.degree(order[i]);
  }
  if (head != omega * (omega - 1) + tail) return false;
  clique.assign(order.begin(), order.begin() + omega);
  independent.assign(order.begin() + omega, order.end());
  canonicalize(clique);
  canonicalize(independent);
  for (size_t i = 0; i < clique.size(); ++i)
    for (size_t j = i + 1; j < clique.size(); ++j)
      if (!g.has_edge(clique[i], clique[j])) throw Error("classify: split witness failed");
  for (size_t i = 0; i < independent.size(); ++i)
    for (size_t j = i + 1; j < independent.size(); ++j)
      if (g.has_edge(independent[i], independent[j])) throw Error("classify: split witness failed");
  return true;
}

}  // namespace

ClassReport classify(const Graph& g) {
  ClassReport report;
  int n = g.vertex_count();
  long long m = g.edge_count();
  report.is_forest = acyclic(g);
  report.is_tree = report.is_forest && g.is_connected();
  report.is_clique = m == static_cast<long long>(n) * (n - 1) / 2;
  std::vector<int> color;
  if (two_color(g, color)) {
    report.is_bipartite = true;
    report.two_coloring = std::move(color);
  }
  report.is_split = split_partition(g, report.split_clique, report.split_independent);
  return report;
}

}  // namespace bded
