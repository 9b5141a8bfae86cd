#include <numeric>

#include "bded/kernels.hpp"

namespace bded {

EdgeSet spanning_forest(const Graph& g) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  EdgeSet forest;
  for (const auto& [u, v] : g.edges()) {
    int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      forest.push_back({u, v});
    }
  }
  return forest;
}

}  // namespace bded
