#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bded/flow.hpp"
#include "bded/kernels.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace bded;

namespace {

// Brute minimum cut: enumerate all source/sink-respecting node bipartitions.
Rational brute_min_cut(const FlowNetwork& net) {
  int n = net.node_count;
  std::vector<int> free_nodes;
  for (int v = 0; v < n; ++v)
    if (v != net.source && v != net.sink) free_nodes.push_back(v);
  Rational best(-1);
  for (uint32_t mask = 0; mask < (1u << free_nodes.size()); ++mask) {
    std::vector<char> on_source_side(n, 0);
    on_source_side[net.source] = 1;
    for (size_t i = 0; i < free_nodes.size(); ++i)
      if (mask >> i & 1) on_source_side[free_nodes[i]] = 1;
    Rational cut(0);
    for (const auto& a : net.arcs)
      if (on_source_side[a.tail] && !on_source_side[a.head]) cut += a.capacity;
    if (best.is_negative() || cut < best) best = cut;
  }
  return best;
}

}  // namespace

TEST_CASE("max flow simple networks") {
  FlowNetwork single(2, 0, 1);
  single.add_arc(0, 1, Rational(5));
  CHECK(max_flow(single).value == Rational(5));

  FlowNetwork twopath(4, 0, 3);
  twopath.add_arc(0, 1, Rational(1));
  twopath.add_arc(1, 3, Rational(1));
  twopath.add_arc(0, 2, Rational(1));
  twopath.add_arc(2, 3, Rational(1));
  CHECK(max_flow(twopath).value == Rational(2));

  CHECK_THROWS_AS(FlowNetwork(2, 0, 0), InvalidArgument);
  FlowNetwork bad(2, 0, 1);
  CHECK_THROWS_AS(bad.add_arc(0, 1, Rational(-1)), InvalidArgument);
}

TEST_CASE("max flow equals brute-force min cut on random networks") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> cap_num(0, 6);
  std::uniform_int_distribution<int> cap_den(1, 4);
  for (int iter = 0; iter < 120; ++iter) {
    int n = 4 + static_cast<int>(rng() % 5);  // up to 8 nodes
    FlowNetwork net(n, 0, 1);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v || rng() % 3 == 0) continue;
        net.add_arc(u, v, Rational(cap_num(rng), cap_den(rng)));
      }
    auto result = max_flow(net);
    CHECK(result.value == brute_min_cut(net));
  }
}

TEST_CASE("maximum matching on fixed graphs") {
  CHECK(maximum_matching(path_graph(4)).size() == 2);
  CHECK(maximum_matching(star_graph(5)).size() == 1);
  CHECK(maximum_matching(bded::testing::petersen_graph()).size() == 5);
  CHECK(maximum_matching(empty_graph(3)).empty());
  CHECK(maximum_matching(complete_graph(7)).size() == 3);
  // triangle-with-tail graphs need blossom handling
  Graph blossomy(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
  CHECK(maximum_matching(blossomy).size() == 2);
}

TEST_CASE("maximum matching equals brute force on random graphs") {
  std::mt19937 rng(43);
  for (int iter = 0; iter < 300; ++iter) {
    int n = 3 + static_cast<int>(rng() % 6);
    Graph g = bded::testing::gnp(n, 0.45, rng);
    if (g.edge_count() > 14) continue;
    EdgeSet matching = maximum_matching(g);
    std::vector<char> used(n, 0);
    for (const auto& [u, v] : matching) {
      CHECK(g.has_edge(u, v));
      CHECK_FALSE(used[u]);
      CHECK_FALSE(used[v]);
      used[u] = used[v] = 1;
    }
    CHECK(static_cast<int>(matching.size()) == bded::testing::brute_max_matching(g));
  }
}

TEST_CASE("spanning forest") {
  CHECK(spanning_forest(cycle_graph(5)).size() == 4);
  Graph tree = path_graph(6);
  CHECK(spanning_forest(tree) == tree.edges());
  CHECK(spanning_forest(complete_graph(4)).size() == 3);

  std::mt19937 rng(47);
  for (int iter = 0; iter < 200; ++iter) {
    Graph g = bded::testing::gnp(9, 0.3, rng);
    EdgeSet forest = spanning_forest(g);
    CHECK(static_cast<int>(forest.size()) == g.vertex_count() - g.component_count());
    Graph f(g.vertex_count(), forest);
    CHECK(feedback_edge_number(f) == 0);
    // maximality: every non-forest edge closes a cycle
    auto comp = f.component_ids();
    for (const auto& e : g.edges())
      if (!set_contains(forest, e)) CHECK(comp[e.first] == comp[e.second]);
  }
}
