#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bded/densest.hpp"
#include "bded/graph.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace bded;

namespace {

Graph hourglass(int ell) {
  // two triangles joined by a path on ell internal vertices
  EdgeSet edges{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
  int prev = 2;
  int next = 6;
  for (int i = 0; i < ell; ++i) {
    edges.push_back(make_edge(prev, next));
    prev = next++;
  }
  edges.push_back(make_edge(prev, 5));
  canonicalize(edges);
  return Graph(next, std::move(edges));
}

}  // namespace

TEST_CASE("rho_star on fixed graphs") {
  auto p3 = rho_star_exact(path_graph(3));
  CHECK(p3.rho_star == Rational(2, 3));
  CHECK(p3.witness == VertexSet{0, 1, 2});

  CHECK(rho_star_exact(Graph()).rho_star == Rational(0));
  CHECK(rho_star_exact(empty_graph(4)).rho_star == Rational(0));
  CHECK(rho_star_exact(empty_graph(4)).witness.empty());

  // K4 with a pendant vertex: the K4 is the densest part
  Graph k4p(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
  auto r = rho_star_exact(k4p);
  CHECK(r.rho_star == Rational(3, 2));
  CHECK(r.witness == VertexSet{0, 1, 2, 3});
  CHECK(rho_star_brute(k4p).rho_star == Rational(3, 2));

  CHECK(rho_star_brute(path_graph(3)).rho_star == Rational(2, 3));
  CHECK(rho_star_brute(complete_graph(5)).rho_star == Rational(2));
}

TEST_CASE("exists_denser_than") {
  auto [c6_at_1, w1] = exists_denser_than(cycle_graph(6), Rational(1));
  CHECK_FALSE(c6_at_1);
  auto [c6_below, w2] = exists_denser_than(cycle_graph(6), Rational(9, 10));
  CHECK(c6_below);
  CHECK(w2 == VertexSet{0, 1, 2, 3, 4, 5});

  // hourglass with ell = 19 has density 26/25
  Graph h = hourglass(19);
  CHECK(h.vertex_count() == 25);
  CHECK(h.edge_count() == 26);
  Rational tau = Rational(1) + Rational(1, 25) - Rational(1, 1000);
  auto [dense, w3] = exists_denser_than(h, tau);
  CHECK(dense);
  CHECK_FALSE(exists_denser_than(h, Rational(26, 25)).first);

  CHECK_FALSE(exists_denser_than(empty_graph(3), Rational(0)).first);
  CHECK(exists_denser_than(path_graph(2), Rational(0)).first);
  CHECK_THROWS_AS(exists_denser_than(path_graph(2), Rational(-1)), InvalidArgument);
}

TEST_CASE("rho_star_brute guards size") {
  CHECK_THROWS_AS(rho_star_brute(empty_graph(21)), TooLarge);
}

TEST_CASE("exact agrees with brute force on random graphs") {
  std::mt19937 rng(53);
  for (int iter = 0; iter < 250; ++iter) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph g = bded::testing::gnp(n, 0.2 + 0.2 * static_cast<double>(rng() % 4), rng);
    auto exact = rho_star_exact(g);
    auto brute = rho_star_brute(g);
    CHECK(exact.rho_star == brute.rho_star);
    // witness really achieves the optimum
    if (!exact.witness.empty()) {
      Rational d(g.induced_edge_count(exact.witness),
                 static_cast<long long>(exact.witness.size()));
      CHECK(d == exact.rho_star);
    }
  }
}

TEST_CASE("densest witness properties") {
  std::mt19937 rng(59);
  for (int iter = 0; iter < 150; ++iter) {
    int n = 2 + static_cast<int>(rng() % 9);
    Graph g = bded::testing::gnp(n, 0.5, rng);
    auto [witness, rho] = rho_star_exact(g);
    if (witness.empty()) continue;
    Graph sub = g.induced(witness);
    // every connected component of the witness is itself densest
    auto comp = sub.component_ids();
    int comps = sub.component_count();
    for (int c = 0; c < comps; ++c) {
      VertexSet members;
      for (int v = 0; v < sub.vertex_count(); ++v)
        if (comp[v] == c) members.push_back(v);
      CHECK(Rational(sub.induced_edge_count(members),
                     static_cast<long long>(members.size())) == rho);
    }
    // outside vertices have at most floor(rho) neighbors inside
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (set_contains(witness, v)) continue;
      long long inside = 0;
      for (VertexId w : g.neighbors(v))
        if (set_contains(witness, w)) ++inside;
      CHECK(inside <= static_cast<long long>(rho.floor()));
    }
    // minimum degree inside the witness is at least ceil(rho)
    for (int v = 0; v < sub.vertex_count(); ++v)
      CHECK(sub.degree(v) >= static_cast<int>(rho.ceil()));
    // rho* is on the lattice
    auto lattice = density_lattice(g);
    CHECK(std::binary_search(lattice.begin(), lattice.end(), rho,
                             [](const Rational& a, const Rational& b) { return a < b; }));
  }
}

TEST_CASE("subdivision preserves the densest subgraph") {
  std::mt19937 rng(61);
  for (int iter = 0; iter < 150; ++iter) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = bded::testing::gnp(n, 0.45, rng);
    auto r = rho_star_exact(g);
    Rational expected = r.rho_star.is_zero()
                            ? Rational(0)
                            : Rational(2) * r.rho_star / (r.rho_star + Rational(1));
    CHECK(rho_star_exact(subdivide(g)).rho_star == expected);
  }
}
