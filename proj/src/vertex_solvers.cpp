#include "bded/vertex_solvers.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "bded/classify.hpp"
#include "bded/cover.hpp"
#include "bded/errors.hpp"
#include "bded/kernels.hpp"

namespace bded {

namespace {

VertexSolution finish(const Graph& g, VertexSet deleted, const Rational& tau, std::string name) {
  canonicalize(deleted);
  DensestResult certificate = rho_star_exact(g.without_vertices(deleted));
  VertexSolution sol{std::move(deleted), std::move(certificate), std::move(name)};
  if (sol.certificate.rho_star > tau)
    throw Error(sol.solver_name + ": residual exceeds target density");
  return sol;
}

int component_bound(const Rational& tau, int n) {
  Rational inv = Rational(1) / (Rational(1) - tau);
  Rational::Int h = inv.floor();
  return h > n ? n : static_cast<int>(h);
}

bool cover_within(const Graph& g, int cap) {
  // matching size is a cheap lower bound on the cover number
  if (static_cast<int>(maximum_matching(g).size()) > cap) return false;
  return static_cast<int>(min_vertex_cover(g).size()) <= cap;
}

}  // namespace

VertexSolution solve_vertex_tree(const Graph& g, const Rational& tau) {
  if (tau.is_negative()) throw InvalidArgument("solve_vertex_tree: negative target density");
  if (feedback_edge_number(g) != 0) throw InvalidArgument("solve_vertex_tree: input is not a forest");
  if (tau >= Rational(1)) return finish(g, {}, tau, "vertex-tree");
  int n = g.vertex_count();
  if (n == 0) return finish(g, {}, tau, "vertex-tree");
  int h = component_bound(tau, n);

  // Iterative post-order per component, rooted at the smallest id.
  std::vector<int> parent(n, -1), order;
  std::vector<char> seen(n, 0);
  order.reserve(n);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int w : g.neighbors(v)) {
        if (seen[w]) continue;
        seen[w] = 1;
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  // Reverse BFS order visits every child before its parent. A vertex whose
  // retained subtree would grow past h is deleted; deleted children
  // contribute nothing to the parent.
  std::vector<int> size(n, 1);
  VertexSet deleted;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (size[v] > h) {
      deleted.push_back(v);
      continue;
    }
    if (parent[v] != -1) size[parent[v]] += size[v];
  }
  return finish(g, std::move(deleted), tau, "vertex-tree");
}

namespace {

bool intersects(const VertexSet& sorted, const VertexSet& candidate) {
  for (VertexId v : candidate)
    if (set_contains(sorted, v)) return true;
  return false;
}

// Candidate checker shared by the enumeration solver: cached witnesses
// prune candidates that leave some dense set untouched.
struct VertexFeasibility {
  const Graph& g;
  const Rational& tau;
  std::vector<VertexSet> cache;

  bool feasible(const VertexSet& candidate) {
    for (const auto& w : cache)
      if (!intersects(w, candidate)) return false;
    std::vector<VertexId> old_ids;
    Graph residual = g.without_vertices(candidate, &old_ids);
    auto witness = find_denser_by_enumeration(residual, tau);
    if (!witness) return true;
    VertexSet original;
    for (VertexId v : *witness) original.push_back(old_ids[v]);
    canonicalize(original);
    cache.push_back(std::move(original));
    return false;
  }
};

}  // namespace

std::optional<VertexSolution> solve_vertex_fpt_vc(const Graph& g, int k, const Rational& tau,
                                                  const Budget& budget) {
  if (tau.is_negative()) throw InvalidArgument("solve_vertex_fpt_vc: negative target density");
  if (k < 0) return std::nullopt;
  VertexSet cover = min_vertex_cover(g);
  int ell = static_cast<int>(cover.size());
  if (ell > budget.max_cover_for_fpt)
    throw BudgetExceeded("solve_vertex_fpt_vc: vertex cover exceeds the configured bound");
  if (k >= ell) return finish(g, cover, tau, "vertex-fpt-vc");  // residual has density 0

  TwinClassPartition twins = twin_classes(g, cover);
  int classes = static_cast<int>(twins.classes.size());
  VertexFeasibility checker{g, tau, {}};
  long long examined = 0;

  // total deletions ascending, then cover subsets, then count vectors in
  // lexicographic order: the first feasible candidate has minimum size
  for (int total = 0; total <= k; ++total) {
    for (uint32_t cover_mask = 0; cover_mask < (1u << ell); ++cover_mask) {
      int from_cover = __builtin_popcount(cover_mask);
      if (from_cover > total) continue;
      int need = total - from_cover;
      std::vector<int> counts(classes, 0);
      // lexicographic enumeration of vectors with sum `need`
      std::function<bool(int, int)> rec = [&](int idx, int left) -> bool {
        if (idx == classes) {
          if (left != 0) return false;
          if (++examined > budget.enumeration_cap)
            throw BudgetExceeded("solve_vertex_fpt_vc: enumeration cap hit");
          VertexSet candidate;
          for (int i = 0; i < ell; ++i)
            if (cover_mask >> i & 1) candidate.push_back(cover[i]);
          for (int c = 0; c < classes; ++c)
            for (int j = 0; j < counts[c]; ++j) candidate.push_back(twins.classes[c].members[j]);
          canonicalize(candidate);
          return checker.feasible(candidate);
        }
        int cap = std::min<int>(left, static_cast<int>(twins.classes[idx].members.size()));
        for (int take = 0; take <= cap; ++take) {
          counts[idx] = take;
          if (rec(idx + 1, left - take)) return true;
          counts[idx] = 0;
        }
        return false;
      };
      if (classes == 0 && need != 0) continue;
      if (rec(0, need)) {
        VertexSet candidate;
        for (int i = 0; i < ell; ++i)
          if (cover_mask >> i & 1) candidate.push_back(cover[i]);
        for (int c = 0; c < classes; ++c)
          for (int j = 0; j < counts[c]; ++j) candidate.push_back(twins.classes[c].members[j]);
        return finish(g, std::move(candidate), tau, "vertex-fpt-vc");
      }
    }
  }
  return std::nullopt;
}

std::optional<VertexSolution> solve_vertex_brute(const Graph& g, int k, const Rational& tau,
                                                 const Budget& budget) {
  if (tau.is_negative()) throw InvalidArgument("solve_vertex_brute: negative target density");
  if (k < 0) return std::nullopt;
  int n = g.vertex_count();
  int limit = std::min(k, n);
  long long candidates = 0;
  {
    long long binom = 1;
    for (int i = 0; i <= limit; ++i) {
      candidates += binom;
      if (candidates > budget.brute_candidates)
        throw TooLarge("solve_vertex_brute: candidate set exceeds budget");
      binom = binom * (n - i) / (i + 1);
    }
  }
  VertexFeasibility checker{g, tau, {}};
  std::vector<int> comb;
  for (int size = 0; size <= limit; ++size) {
    comb.assign(size, 0);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
      VertexSet candidate(comb.begin(), comb.end());
      if (checker.feasible(candidate))
        return finish(g, std::move(candidate), tau, "vertex-brute");
      if (size == 0) break;
      int i = size - 1;
      while (i >= 0 && comb[i] == n - size + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return std::nullopt;
}

VertexSolution minimize_vertex_deletions(const Graph& g, const Rational& tau, VertexSolverKind kind,
                                         const Budget& budget) {
  if (tau.is_negative()) throw InvalidArgument("minimize_vertex_deletions: negative target density");
  switch (kind) {
    case VertexSolverKind::Tree:
      return solve_vertex_tree(g, tau);
    case VertexSolverKind::FptVc: {
      int ell = static_cast<int>(min_vertex_cover(g).size());
      if (ell == 0) return finish(g, {}, tau, "vertex-fpt-vc");
      if (auto sol = solve_vertex_fpt_vc(g, ell - 1, tau, budget)) return *sol;
      // nothing below ell works, and the cover itself always does
      return solve_vertex_fpt_vc(g, ell, tau, budget).value();
    }
    case VertexSolverKind::Brute: {
      auto sol = solve_vertex_brute(g, g.vertex_count(), tau, budget);
      if (!sol) throw Error("vertex-brute: minimization failed");
      return *sol;
    }
    case VertexSolverKind::Auto: {
      if (classify(g).is_forest) return solve_vertex_tree(g, tau);
      try {
        if (cover_within(g, budget.max_cover_for_fpt))
          return minimize_vertex_deletions(g, tau, VertexSolverKind::FptVc, budget);
      } catch (const BudgetExceeded&) {
      }
      try {
        if (auto sol = solve_vertex_brute(g, g.vertex_count(), tau, budget)) return *sol;
      } catch (const TooLarge&) {
      }
      throw NoApplicableSolver("no exact vertex-deletion backend fits this instance within budget");
    }
  }
  throw Error("minimize_vertex_deletions: unreachable");
}

std::optional<VertexSolution> decide_vertex(const Graph& g, int k, const Rational& tau,
                                            VertexSolverKind kind, const Budget& budget) {
  if (k < 0) return std::nullopt;
  if (kind == VertexSolverKind::FptVc) return solve_vertex_fpt_vc(g, k, tau, budget);
  if (kind == VertexSolverKind::Brute) return solve_vertex_brute(g, k, tau, budget);
  if (kind == VertexSolverKind::Auto && !classify(g).is_forest) {
    if (cover_within(g, budget.max_cover_for_fpt)) return solve_vertex_fpt_vc(g, k, tau, budget);
    try {
      return solve_vertex_brute(g, k, tau, budget);
    } catch (const TooLarge&) {
      throw NoApplicableSolver("no exact vertex-deletion backend fits this instance within budget");
    }
  }
  VertexSolution optimum = minimize_vertex_deletions(g, tau, kind, budget);
  if (static_cast<int>(optimum.deleted.size()) <= k) return optimum;
  return std::nullopt;
}

std::pair<Rational, VertexSolution> minimize_density_vertex(const Graph& g, int k,
                                                            VertexSolverKind kind,
                                                            const Budget& budget) {
  std::vector<Rational> lattice = density_lattice(g);
  size_t lo = 0, hi = lattice.size() - 1;
  std::optional<VertexSolution> best = decide_vertex(g, k, lattice[hi], kind, budget);
  if (!best) throw Error("minimize_density_vertex: maximal density must be feasible");
  while (lo < hi) {
    size_t mid = lo + (hi - lo) / 2;
    if (auto sol = decide_vertex(g, k, lattice[mid], kind, budget)) {
      best = std::move(sol);
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return {lattice[hi], std::move(*best)};
}

}  // namespace bded
