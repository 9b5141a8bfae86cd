#pragma once

#include <random>

#include "bded/graph.hpp"

namespace bded::testing {

inline Graph gnp(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  EdgeSet edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

/// Uniform random labelled tree via Pruefer decode.
inline Graph random_tree(int n, std::mt19937& rng) {
  if (n <= 1) return Graph(n);
  if (n == 2) return Graph(2, {{0, 1}});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> pruefer(n - 2);
  for (int& x : pruefer) x = pick(rng);
  std::vector<int> degree(n, 1);
  for (int x : pruefer) ++degree[x];
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  EdgeSet edges;
  for (int x : pruefer) {
    edges.push_back(make_edge(leaf, x));
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back(make_edge(leaf, n - 1));
  canonicalize(edges);
  return Graph(n, std::move(edges));
}

/// Random graph whose vertex cover number is at most `cover_size`:
/// edges touch only the first `cover_size` vertices.
inline Graph random_small_cover_graph(int n, int cover_size, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  EdgeSet edges;
  for (int u = 0; u < cover_size; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

/// Random forest: a random tree with each edge kept independently.
inline Graph random_forest(int n, double keep, std::mt19937& rng) {
  Graph tree = random_tree(n, rng);
  std::bernoulli_distribution coin(keep);
  EdgeSet edges;
  for (const auto& e : tree.edges())
    if (coin(rng)) edges.push_back(e);
  return Graph(n, std::move(edges));
}

inline Graph petersen_graph() {
  EdgeSet edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i, (i + 1) % 5));      // outer cycle
    edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));  // inner pentagram
    edges.push_back(make_edge(i, 5 + i));            // spokes
  }
  canonicalize(edges);
  return Graph(10, std::move(edges));
}

}  // namespace bded::testing
