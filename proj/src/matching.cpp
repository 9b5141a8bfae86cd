#include <numeric>
#include <queue>

#include "bded/kernels.hpp"

namespace bded {

namespace {

// Blossom shrinking over an explicit base[] array. Augments from each free
// vertex in ascending id order; O(n^3).
struct Blossom {
  const Graph& g;
  int n;
  std::vector<int> match, parent, base;
  std::vector<char> used, in_blossom;

  explicit Blossom(const Graph& graph)
      : g(graph), n(graph.vertex_count()), match(n, -1), parent(n, -1), base(n) {}

  int lca(int a, int b) {
    std::vector<char> mark(n, 0);
    while (true) {
      a = base[a];
      mark[a] = 1;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    while (true) {
      b = base[b];
      if (mark[b]) return b;
      b = parent[match[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base[v] != b) {
      in_blossom[base[v]] = 1;
      in_blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  }

  bool augment_from(int root) {
    used.assign(n, 0);
    parent.assign(n, -1);
    std::iota(base.begin(), base.end(), 0);
    used[root] = 1;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int to : g.neighbors(v)) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          // Odd cycle: contract the blossom around the lca.
          int cur_base = lca(v, to);
          in_blossom.assign(n, 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n; ++i) {
            if (in_blossom[base[i]]) {
              base[i] = cur_base;
              if (!used[i]) {
                used[i] = 1;
                queue.push(i);
              }
            }
          }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) {
            // Augment along the alternating path back to the root.
            int u = to;
            while (u != -1) {
              int pv = parent[u];
              int next = match[pv];
              match[u] = pv;
              match[pv] = u;
              u = next;
            }
            return true;
          }
          used[match[to]] = 1;
          queue.push(match[to]);
        }
      }
    }
    return false;
  }

  EdgeSet run() {
    // Greedy seed in canonical edge order.
    for (const auto& [u, v] : g.edges()) {
      if (match[u] == -1 && match[v] == -1) {
        match[u] = v;
        match[v] = u;
      }
    }
    for (int v = 0; v < n; ++v)
      if (match[v] == -1) augment_from(v);
    EdgeSet result;
    for (int v = 0; v < n; ++v)
      if (match[v] > v) result.push_back({v, match[v]});
    return result;
  }
};

}  // namespace

EdgeSet maximum_matching(const Graph& g) { return Blossom(g).run(); }

}  // namespace bded
