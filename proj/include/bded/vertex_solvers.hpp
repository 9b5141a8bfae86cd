#pragma once

#include <optional>
#include <string>

#include "bded/budget.hpp"
#include "bded/densest.hpp"
#include "bded/graph.hpp"

namespace bded {

/// A vertex deletion set with a densest-subgraph certificate for the
/// residual graph (rho_star <= tau is asserted on every return path).
struct VertexSolution {
  VertexSet deleted;
  DensestResult certificate;
  std::string solver_name;
};

enum class VertexSolverKind { Auto, Tree, FptVc, Brute };

/// Linear-time greedy on forests: walk bottom-up and delete any vertex
/// whose retained subtree would exceed floor(1/(1-tau)) vertices.
VertexSolution solve_vertex_tree(const Graph& g, const Rational& tau);

/// Enumeration over subsets of a minimum vertex cover combined with
/// per-twin-class deletion counts; candidates are checked by the flow
/// decision in ascending size order, so the first hit is minimum.
std::optional<VertexSolution> solve_vertex_fpt_vc(const Graph& g, int k, const Rational& tau,
                                                  const Budget& budget = {});

/// Oracle: vertex subsets by ascending size.
std::optional<VertexSolution> solve_vertex_brute(const Graph& g, int k, const Rational& tau,
                                                 const Budget& budget = {});

std::optional<VertexSolution> decide_vertex(const Graph& g, int k, const Rational& tau,
                                            VertexSolverKind kind = VertexSolverKind::Auto,
                                            const Budget& budget = {});

VertexSolution minimize_vertex_deletions(const Graph& g, const Rational& tau,
                                         VertexSolverKind kind = VertexSolverKind::Auto,
                                         const Budget& budget = {});

std::pair<Rational, VertexSolution> minimize_density_vertex(
    const Graph& g, int k, VertexSolverKind kind = VertexSolverKind::Auto,
    const Budget& budget = {});

}  // namespace bded
