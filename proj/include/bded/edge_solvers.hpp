#pragma once

#include <optional>
#include <string>

#include "bded/budget.hpp"
#include "bded/densest.hpp"
#include "bded/graph.hpp"

namespace bded {

/// An edge deletion set together with a certificate for the residual
/// graph. Every constructor path verifies certificate.rho_star <= tau.
struct EdgeSolution {
  EdgeSet deleted;
  DensestResult certificate;
  std::string solver_name;
};

enum class EdgeSolverKind { Auto, Interval, Tree, Clique, FptVc, Brute };

/// Minimum deletion set for tau in [0, 2/3) via matchings or in
/// [1 - 1/n, 1] via spanning forests / pseudoforests. Returns nothing for
/// target densities outside those intervals.
std::optional<EdgeSolution> solve_edge_interval(const Graph& g, const Rational& tau);

/// Minimum deletion set on forests: every residual component must have at
/// most floor(1/(1-tau)) vertices. Component-size DP, O(n h^2).
EdgeSolution solve_edge_tree(const Graph& g, const Rational& tau);

/// Builds a graph on n vertices and m edges in which rho'(H) is maximized
/// by the whole graph (so rho* = m/n). Requires n-1 <= m <= n(n-1)/2.
/// Self-verifies via rho_star_exact and repairs or throws on failure.
Graph construct_strongly_balanced(int n, long long m);

/// Minimum deletion set for the complete graph K_n at any target density.
EdgeSolution solve_edge_clique(int n, const Rational& tau);

/// Decision via ILP over twin classes of a minimum vertex cover, with the
/// density constraints generated lazily from flow witnesses. Returns a
/// deletion set of size <= k iff one exists.
std::optional<EdgeSolution> solve_edge_fpt_vc(const Graph& g, int k, const Rational& tau,
                                              const Budget& budget = {});

/// Oracle: enumerates deletion sets by ascending size.
std::optional<EdgeSolution> solve_edge_brute(const Graph& g, int k, const Rational& tau,
                                             const Budget& budget = {});

/// Decision wrapper: a solution with |F| <= k, or nothing when the answer
/// is no. Auto dispatch order: clique, forest, supported intervals,
/// FPT by vertex cover, brute force.
std::optional<EdgeSolution> decide_edge(const Graph& g, int k, const Rational& tau,
                                        EdgeSolverKind kind = EdgeSolverKind::Auto,
                                        const Budget& budget = {});

/// Smallest deletion count achieving rho* <= tau.
EdgeSolution minimize_edge_deletions(const Graph& g, const Rational& tau,
                                     EdgeSolverKind kind = EdgeSolverKind::Auto,
                                     const Budget& budget = {});

/// Smallest lattice density achievable with at most k deletions; binary
/// search over the candidate density set.
std::pair<Rational, EdgeSolution> minimize_density(const Graph& g, int k,
                                                   EdgeSolverKind kind = EdgeSolverKind::Auto,
                                                   const Budget& budget = {});

}  // namespace bded
