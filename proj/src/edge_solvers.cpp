#include "bded/edge_solvers.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bded/classify.hpp"
#include "bded/cover.hpp"
#include "bded/errors.hpp"
#include "bded/ilp.hpp"
#include "bded/kernels.hpp"

namespace bded {

namespace {

long long to_ll(Rational::Int v) {
  if (v > Rational::Int(9'000'000'000'000'000'000LL) || v < -Rational::Int(9'000'000'000'000'000'000LL))
    throw Error("edge solver: value out of 64-bit range");
  return static_cast<long long>(v);
}

EdgeSolution finish(const Graph& g, EdgeSet deleted, const Rational& tau, std::string name) {
  canonicalize(deleted);
  DensestResult certificate = rho_star_exact(g.without_edges(deleted));
  EdgeSolution sol{std::move(deleted), std::move(certificate), std::move(name)};
  if (sol.certificate.rho_star > tau) throw Error(sol.solver_name + ": residual exceeds target density");
  return sol;
}

EdgeSet complement_of(const Graph& g, const EdgeSet& kept) {
  EdgeSet deleted;
  std::set_difference(g.edges().begin(), g.edges().end(), kept.begin(), kept.end(),
                      std::back_inserter(deleted));
  return deleted;
}

/// Component order bound for target densities below one: a tree on more
/// than floor(1/(1-tau)) vertices is already too dense.
int component_bound(const Rational& tau, int n) {
  Rational inv = Rational(1) / (Rational(1) - tau);
  Rational::Int h = inv.floor();
  if (h > n) return n;
  return static_cast<int>(h);
}

}  // namespace

std::optional<EdgeSolution> solve_edge_interval(const Graph& g, const Rational& tau) {
  if (tau.is_negative()) throw InvalidArgument("solve_edge_interval: negative target density");
  int n = g.vertex_count();
  if (g.edge_count() == 0) return finish(g, {}, tau, "edge-interval");
  if (tau < Rational(1, 2)) {
    // a single edge has density 1/2, so nothing may remain
    return finish(g, g.edges(), tau, "edge-interval");
  }
  if (tau < Rational(2, 3)) {
    // components of more than one edge contain a 3-vertex path (2/3)
    return finish(g, complement_of(g, maximum_matching(g)), tau, "edge-interval");
  }
  if (tau < Rational(1)) {
    if (tau < Rational(n - 1, n)) return std::nullopt;  // unsupported gap
    // acyclic residual, and any forest stays below 1 - 1/n
    return finish(g, complement_of(g, spanning_forest(g)), tau, "edge-interval");
  }
  if (tau == Rational(1)) {
    // pseudoforest: per component a spanning tree plus one reinserted edge
    EdgeSet kept = spanning_forest(g);
    auto comp = g.component_ids();
    std::vector<char> reinserted(g.component_count(), 0);
    for (const auto& e : g.edges()) {
      if (set_contains(kept, e)) continue;
      int c = comp[e.first];
      if (!reinserted[c]) {
        reinserted[c] = 1;
        kept.push_back(e);
      }
    }
    canonicalize(kept);
    return finish(g, complement_of(g, kept), tau, "edge-interval");
  }
  return std::nullopt;
}

EdgeSolution solve_edge_tree(const Graph& g, const Rational& tau) {
  if (tau.is_negative()) throw InvalidArgument("solve_edge_tree: negative target density");
  if (feedback_edge_number(g) != 0) throw InvalidArgument("solve_edge_tree: input is not a forest");
  if (tau >= Rational(1)) return finish(g, {}, tau, "edge-tree");
  int n = g.vertex_count();
  if (n == 0) return finish(g, {}, tau, "edge-tree");
  int h = component_bound(tau, n);

  // Parent structure per component, rooted at the smallest id.
  std::vector<int> parent(n, -1), order;
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> children(n);
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
        children[v].push_back(w);
        stack.push_back(w);
      }
    }
  }
  for (auto& ch : children) std::sort(ch.begin(), ch.end());

  // dp[v][s] = fewest deletions below v with v's retained component having
  // exactly s vertices (s in 1..h); merged child by child.
  const long long kInf = static_cast<long long>(g.edge_count()) + 1;
  std::vector<std::vector<long long>> dp(n);
  std::vector<long long> cut_cost(n, 0);
  // choices[v][i][s]: size taken from child i when v's table holds s after
  // merging child i; 0 encodes cutting the edge to that child.
  std::vector<std::vector<std::vector<int>>> choices(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    dp[v].assign(h + 1, kInf);
    dp[v][1] = 0;
    choices[v].reserve(children[v].size());
    for (int c : children[v]) {
      std::vector<long long> merged(h + 1, kInf);
      std::vector<int> pick(h + 1, 0);
      for (int s = 1; s <= h; ++s) {
        if (dp[v][s] == kInf) continue;
        long long cut = dp[v][s] + cut_cost[c] + 1;
        if (cut < merged[s]) {
          merged[s] = cut;
          pick[s] = 0;
        }
        for (int s2 = 1; s + s2 <= h; ++s2) {
          if (dp[c][s2] == kInf) continue;
          long long keep = dp[v][s] + dp[c][s2];
          if (keep < merged[s + s2]) {
            merged[s + s2] = keep;
            pick[s + s2] = s2;
          }
        }
      }
      dp[v] = std::move(merged);
      choices[v].push_back(std::move(pick));
    }
    cut_cost[v] = *std::min_element(dp[v].begin() + 1, dp[v].end());
  }

  // Reconstruct by replaying the merges backwards from each root.
  EdgeSet deleted;
  std::vector<std::pair<int, int>> stack;  // (vertex, component size at that vertex)
  for (int v = 0; v < n; ++v) {
    if (parent[v] != -1) continue;
    int best_s = 1;
    for (int s = 1; s <= h; ++s)
      if (dp[v][s] < dp[v][best_s]) best_s = s;
    stack.push_back({v, best_s});
  }
  while (!stack.empty()) {
    auto [v, s] = stack.back();
    stack.pop_back();
    for (int i = static_cast<int>(children[v].size()) - 1; i >= 0; --i) {
      int c = children[v][i];
      int s2 = choices[v][i][s];
      if (s2 == 0) {
        deleted.push_back(make_edge(v, c));
        int child_best = 1;
        for (int t = 1; t <= h; ++t)
          if (dp[c][t] < dp[c][child_best]) child_best = t;
        stack.push_back({c, child_best});
      } else {
        stack.push_back({c, s2});
        s -= s2;
      }
    }
  }
  return finish(g, std::move(deleted), tau, "edge-tree");
}

Graph construct_strongly_balanced(int n, long long m) {
  long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (n < 2 || m < n - 1 || m > max_edges)
    throw InvalidArgument("construct_strongly_balanced: (n, m) out of range");
  if (m == n - 1) return path_graph(n);

  // Hamiltonian cycle, then chord levels by decreasing circular distance;
  // a partial level spreads its chords evenly around the cycle. Long
  // chords first keeps short cycles (and so locally dense spots) away
  // until the graph is dense enough to absorb them. Every cycle of
  // length L forces L/(L-1) <= m/(n-1), so chords may not close a cycle
  // shorter than m/(m-n+1); a small BFS check steers the placement.
  EdgeSet edges;
  for (int v = 0; v < n; ++v) edges.push_back(make_edge(v, (v + 1) % n));
  canonicalize(edges);
  long long min_cycle = (m + (m - n + 1) - 1) / (m - n + 1);  // ceil
  auto cycle_through = [&](const Edge& chord) {
    // shortest alternative u-v path in the chords placed so far
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::vector<int> dist(n, -1);
    std::vector<int> queue{chord.first};
    dist[chord.first] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int w : adj[v])
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
    }
    return dist[chord.second] + 1;
  };
  long long remaining = m - n;
  for (int d = n / 2; d >= 2 && remaining > 0; --d) {
    int level_size = (2 * d == n) ? n / 2 : n;
    long long take = std::min<long long>(remaining, level_size);
    if (take == level_size) {
      for (int i = 0; i < level_size; ++i) edges.push_back(make_edge(i, (i + d) % n));
    } else {
      for (long long t = 0; t < take; ++t) {
        int ideal = static_cast<int>(t * level_size / take);
        Edge fallback{-1, -1};
        bool placed = false;
        for (int delta = 0; delta < level_size && !placed; ++delta) {
          Edge chord = make_edge((ideal + delta) % n, (ideal + delta + d) % n);
          if (set_contains(edges, chord)) continue;
          if (fallback.first == -1) fallback = chord;
          if (cycle_through(chord) >= min_cycle) {
            edges.push_back(chord);
            canonicalize(edges);
            placed = true;
          }
        }
        if (!placed) {
          edges.push_back(fallback);
          canonicalize(edges);
        }
      }
    }
    canonicalize(edges);
    remaining -= take;
  }
  Graph g(n, std::move(edges));

  // Where enumeration is affordable, enforce the stronger invariant
  // directly: no subgraph may beat the whole graph on m/(n-1). Violations
  // are repaired by swapping one edge out of the offending subset for the
  // first replacement that removes every violation.
  if (n <= 12) {
    Rational bound(m, n - 1);
    auto violating_subset = [&](const Graph& graph) -> uint32_t {
      for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size < 2) continue;
        long long inside = 0;
        for (const auto& [a, b] : graph.edges())
          if ((mask >> a & 1) && (mask >> b & 1)) ++inside;
        if (Rational(inside, size - 1) > bound) return mask;
      }
      return 0;
    };
    for (int attempt = 0; attempt <= 4 * n; ++attempt) {
      uint32_t bad = violating_subset(g);
      if (bad == 0) break;
      bool repaired = false;
      for (const auto& victim : g.edges()) {
        if (!((bad >> victim.first & 1) && (bad >> victim.second & 1))) continue;
        for (int u = 0; u < n && !repaired; ++u)
          for (int v = u + 1; v < n && !repaired; ++v) {
            if (g.has_edge(u, v)) continue;
            EdgeSet next = g.edges();
            next.erase(std::find(next.begin(), next.end(), victim));
            next.push_back({u, v});
            canonicalize(next);
            Graph candidate(n, next);
            if (violating_subset(candidate) == 0) {
              g = std::move(candidate);
              repaired = true;
            }
          }
        if (repaired) break;
      }
      if (!repaired)
        throw ConstructionFailed("construct_strongly_balanced: no repair for n=" +
                                 std::to_string(n) + " m=" + std::to_string(m));
    }
    if (violating_subset(g) != 0)
      throw ConstructionFailed("construct_strongly_balanced: repairs did not converge");
  }

  // Self-verification: the whole graph must be a densest subgraph. On
  // failure, move an edge out of the dense witness to the sparsest
  // non-adjacent pair and retry.
  Rational target(m, n);
  for (int attempt = 0; attempt <= 2 * n + 20; ++attempt) {
    auto result = rho_star_exact(g);
    if (result.rho_star == target) return g;
    EdgeSet inside;
    for (const auto& e : g.edges())
      if (set_contains(result.witness, e.first) && set_contains(result.witness, e.second))
        inside.push_back(e);
    if (inside.empty()) break;
    Edge victim = inside.front();
    Edge best{-1, -1};
    int best_score = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (g.has_edge(u, v) || (u == victim.first && v == victim.second)) continue;
        int score = g.degree(u) + g.degree(v);
        if (best.first == -1 || score < best_score) {
          best = {u, v};
          best_score = score;
        }
      }
    if (best.first == -1) break;
    EdgeSet next = g.edges();
    next.erase(std::find(next.begin(), next.end(), victim));
    next.push_back(best);
    canonicalize(next);
    g = Graph(n, std::move(next));
  }
  throw ConstructionFailed("construct_strongly_balanced: verification failed for n=" +
                           std::to_string(n) + " m=" + std::to_string(m));
}

EdgeSolution solve_edge_clique(int n, const Rational& tau) {
  if (n < 1) throw InvalidArgument("solve_edge_clique: need n >= 1");
  if (tau.is_negative()) throw InvalidArgument("solve_edge_clique: negative target density");
  Graph g = complete_graph(n);
  if (tau >= Rational(n - 1, 2)) return finish(g, {}, tau, "edge-clique");
  if (tau < Rational(1)) {
    // residual components are trees on at most t vertices
    int t = component_bound(tau, n);
    EdgeSet kept;
    for (int start = 0; start < n; start += t) {
      int end = std::min(start + t, n);
      for (int v = start; v + 1 < end; ++v) kept.push_back({v, v + 1});
    }
    return finish(g, complement_of(g, kept), tau, "edge-clique");
  }
  // keep the densest balanced graph the lattice allows
  long long keep_edges = to_ll((tau * Rational(n)).floor());
  Graph balanced = construct_strongly_balanced(n, keep_edges);
  EdgeSet kept = balanced.edges();
  return finish(g, complement_of(g, kept), tau, "edge-clique");
}

namespace {

// Shared layout of the twin-class ILP for the vertex-cover FPT solver.
struct FptModel {
  VertexSet cover;
  std::vector<int> cover_pos;                    // vertex -> bit, -1 outside
  std::vector<uint32_t> class_masks;             // realized neighborhoods, ascending
  std::map<uint32_t, std::vector<VertexId>> members;
  struct XVar {
    uint32_t cls;
    uint32_t target;
    int var;
    int cost;
  };
  std::vector<XVar> xvars;
  std::vector<std::pair<Edge, int>> zvars;       // cover-internal edges
  IlpModel ilp;
};

FptModel build_fpt_model(const Graph& g, int k) {
  FptModel fm;
  fm.cover = min_vertex_cover(g);
  fm.cover_pos.assign(g.vertex_count(), -1);
  for (size_t i = 0; i < fm.cover.size(); ++i) fm.cover_pos[fm.cover[i]] = static_cast<int>(i);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (fm.cover_pos[v] != -1) continue;
    uint32_t mask = 0;
    for (VertexId w : g.neighbors(v)) mask |= 1u << fm.cover_pos[w];
    fm.members[mask].push_back(v);
  }
  for (const auto& entry : fm.members) fm.class_masks.push_back(entry.first);

  std::vector<std::pair<int, long long>> budget_terms;
  for (uint32_t mask : fm.class_masks) {
    int count = static_cast<int>(fm.members[mask].size());
    std::vector<std::pair<int, long long>> class_total;
    uint32_t sub = 0;
    while (true) {  // submasks of `mask` in ascending order
      int cost = __builtin_popcount(mask) - __builtin_popcount(sub);
      int var = fm.ilp.add_variable("x_" + std::to_string(mask) + "_" + std::to_string(sub), 0, count);
      fm.xvars.push_back({mask, sub, var, cost});
      class_total.push_back({var, 1});
      if (cost > 0) budget_terms.push_back({var, cost});
      if (sub == mask) break;
      sub = (sub - mask) & mask;
    }
    fm.ilp.add_constraint(std::move(class_total), IlpModel::Relation::Eq, Rational(count));
  }
  long long cover_edges = 0;
  for (const auto& e : g.edges()) {
    if (fm.cover_pos[e.first] == -1 || fm.cover_pos[e.second] == -1) continue;
    int var = fm.ilp.add_variable("z_" + std::to_string(e.first) + "_" + std::to_string(e.second), 0, 1);
    fm.zvars.push_back({e, var});
    budget_terms.push_back({var, -1});
    ++cover_edges;
  }
  // total deletions = sum(cost * x) + (cover_edges - sum(z)) <= k
  fm.ilp.add_constraint(budget_terms, IlpModel::Relation::LessEq, Rational(k - cover_edges));
  fm.ilp.set_objective(std::move(budget_terms));
  return fm;
}

// Deterministic realization of an assignment: class members in id order
// are dealt out to target classes in ascending-mask variable order.
std::map<VertexId, uint32_t> assigned_targets(const FptModel& fm, const Assignment& x) {
  std::map<VertexId, uint32_t> target;
  std::map<uint32_t, size_t> next_index;
  for (const auto& xv : fm.xvars) {
    const auto& mem = fm.members.at(xv.cls);
    size_t& idx = next_index[xv.cls];
    for (long long t = 0; t < x[xv.var]; ++t) target[mem[idx++]] = xv.target;
  }
  return target;
}

Graph residual_from_assignment(const Graph& g, const FptModel& fm, const Assignment& x) {
  EdgeSet edges;
  for (const auto& [e, var] : fm.zvars)
    if (x[var] == 1) edges.push_back(e);
  for (const auto& [v, mask] : assigned_targets(fm, x)) {
    for (uint32_t bits = mask; bits != 0; bits &= bits - 1)
      edges.push_back(make_edge(v, fm.cover[__builtin_ctz(bits)]));
  }
  canonicalize(edges);
  return Graph(g.vertex_count(), std::move(edges));
}

}  // namespace

std::optional<EdgeSolution> solve_edge_fpt_vc(const Graph& g, int k, const Rational& tau,
                                              const Budget& budget) {
  if (tau.is_negative()) throw InvalidArgument("solve_edge_fpt_vc: negative target density");
  if (k < 0) return std::nullopt;
  FptModel fm = build_fpt_model(g, std::min(k, g.edge_count()));
  if (static_cast<int>(fm.cover.size()) > budget.max_cover_for_fpt)
    throw BudgetExceeded("solve_edge_fpt_vc: vertex cover exceeds the configured bound");

  long long p = to_ll(tau.num()), q = to_ll(tau.den());
  LazySeparator separator = [&](const Assignment& x) -> std::optional<IlpModel::Constraint> {
    Graph residual = residual_from_assignment(g, fm, x);
    auto [denser, witness] = exists_denser_than(residual, tau);
    if (!denser) return std::nullopt;
    // Violated family member: C' = witness within the cover; classes whose
    // kept neighborhood meets C' in more than tau vertices join in full.
    uint32_t cmask = 0;
    long long csize = 0;
    for (VertexId v : witness)
      if (fm.cover_pos[v] != -1) {
        cmask |= 1u << fm.cover_pos[v];
        ++csize;
      }
    IlpModel::Constraint cut;
    cut.relation = IlpModel::Relation::LessEq;
    cut.rhs = p * csize;
    for (const auto& [e, var] : fm.zvars) {
      if ((cmask >> fm.cover_pos[e.first] & 1) && (cmask >> fm.cover_pos[e.second] & 1))
        cut.terms.push_back({var, q});
    }
    for (const auto& xv : fm.xvars) {
      long long d = __builtin_popcount(xv.target & cmask);
      if (q * d > p) cut.terms.push_back({xv.var, q * d - p});
    }
    return cut;
  };

  std::optional<IlpSolution> sol = solve_ilp(fm.ilp, separator, budget);
  if (!sol) return std::nullopt;
  EdgeSet deleted;
  for (const auto& [e, var] : fm.zvars)
    if (sol->values[var] == 0) deleted.push_back(e);
  for (const auto& [v, mask] : assigned_targets(fm, sol->values)) {
    uint32_t cls = 0;
    for (VertexId w : g.neighbors(v)) cls |= 1u << fm.cover_pos[w];
    for (uint32_t bits = cls & ~mask; bits != 0; bits &= bits - 1)
      deleted.push_back(make_edge(v, fm.cover[__builtin_ctz(bits)]));
  }
  EdgeSolution out = finish(g, std::move(deleted), tau, "edge-fpt-vc");
  if (static_cast<int>(out.deleted.size()) > k)
    throw Error("solve_edge_fpt_vc: optimum exceeds budget despite cap");
  return out;
}

namespace {

using WitnessMask = std::vector<uint64_t>;

WitnessMask edges_inside(const Graph& g, const VertexSet& witness) {
  WitnessMask mask((g.edge_count() + 63) / 64, 0);
  for (size_t i = 0; i < g.edges().size(); ++i) {
    const auto& [u, v] = g.edges()[i];
    if (set_contains(witness, u) && set_contains(witness, v)) mask[i / 64] |= uint64_t(1) << (i % 64);
  }
  return mask;
}

bool disjoint(const WitnessMask& a, const WitnessMask& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return false;
  return true;
}

}  // namespace

std::optional<EdgeSolution> solve_edge_brute(const Graph& g, int k, const Rational& tau,
                                             const Budget& budget) {
  if (tau.is_negative()) throw InvalidArgument("solve_edge_brute: negative target density");
  if (k < 0) return std::nullopt;
  const EdgeSet& all = g.edges();
  int m = static_cast<int>(all.size());
  int limit = std::min(k, m);
  // candidate count check before enumerating
  long long candidates = 0;
  {
    long long binom = 1;
    for (int i = 0; i <= limit; ++i) {
      candidates += binom;
      if (candidates > budget.brute_candidates)
        throw TooLarge("solve_edge_brute: candidate set exceeds budget");
      binom = binom * (m - i) / (i + 1);
    }
  }

  // Dense witnesses found so far; a candidate disjoint from a witness's
  // edge set cannot be feasible, which skips almost all density checks.
  std::vector<WitnessMask> cache;
  WitnessMask fmask((m + 63) / 64, 0);
  std::vector<int> comb;
  for (int size = 0; size <= limit; ++size) {
    comb.assign(size, 0);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
      std::fill(fmask.begin(), fmask.end(), 0);
      for (int i : comb) fmask[i / 64] |= uint64_t(1) << (i % 64);
      bool skip = false;
      for (const auto& w : cache)
        if (disjoint(fmask, w)) {
          skip = true;
          break;
        }
      if (!skip) {
        EdgeSet chosen;
        for (int i : comb) chosen.push_back(all[i]);
        Graph residual = g.without_edges(chosen);
        auto witness = find_denser_by_enumeration(residual, tau);
        if (!witness) return finish(g, std::move(chosen), tau, "edge-brute");
        cache.push_back(edges_inside(g, *witness));
      }
      if (size == 0) break;
      int i = size - 1;
      while (i >= 0 && comb[i] == m - size + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return std::nullopt;
}

namespace {

std::optional<EdgeSolution> fpt_minimize(const Graph& g, const Rational& tau, const Budget& budget) {
  int m = g.edge_count();
  // doubling then bisection on the budget; each probe is capped so the
  // branch and bound never explores past the candidate value
  int last_fail = -1;
  int probe = 0;
  std::optional<EdgeSolution> best;
  while (true) {
    best = solve_edge_fpt_vc(g, probe, tau, budget);
    if (best) break;
    last_fail = probe;
    if (probe >= m) return std::nullopt;
    probe = std::min(m, probe == 0 ? 1 : probe * 2);
  }
  int lo = last_fail + 1;
  int hi = static_cast<int>(best->deleted.size());
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    if (auto sol = solve_edge_fpt_vc(g, mid, tau, budget)) {
      best = std::move(sol);
      hi = static_cast<int>(best->deleted.size());
    } else {
      lo = mid + 1;
    }
  }
  return best;
}

bool cover_within(const Graph& g, int cap) {
  // cheap maximal-matching bound first: cover number >= matching size
  EdgeSet matching = maximum_matching(g);
  if (static_cast<int>(matching.size()) > cap) return false;
  return static_cast<int>(min_vertex_cover(g).size()) <= cap;
}

}  // namespace

EdgeSolution minimize_edge_deletions(const Graph& g, const Rational& tau, EdgeSolverKind kind,
                                     const Budget& budget) {
  if (tau.is_negative()) throw InvalidArgument("minimize_edge_deletions: negative target density");
  switch (kind) {
    case EdgeSolverKind::Interval: {
      auto sol = solve_edge_interval(g, tau);
      if (!sol) throw UnsupportedDensity("edge-interval: target density outside supported ranges");
      return *sol;
    }
    case EdgeSolverKind::Tree:
      return solve_edge_tree(g, tau);
    case EdgeSolverKind::Clique: {
      if (!classify(g).is_clique) throw InvalidArgument("edge-clique: input is not a clique");
      return solve_edge_clique(g.vertex_count(), tau);
    }
    case EdgeSolverKind::FptVc: {
      auto sol = fpt_minimize(g, tau, budget);
      if (!sol) throw Error("edge-fpt-vc: minimization failed");
      return *sol;
    }
    case EdgeSolverKind::Brute: {
      auto sol = solve_edge_brute(g, g.edge_count(), tau, budget);
      if (!sol) throw Error("edge-brute: minimization failed");
      return *sol;
    }
    case EdgeSolverKind::Auto: {
      ClassReport report = classify(g);
      if (report.is_clique) return solve_edge_clique(g.vertex_count(), tau);
      if (report.is_forest) return solve_edge_tree(g, tau);
      if (auto sol = solve_edge_interval(g, tau)) return *sol;
      try {
        if (cover_within(g, budget.max_cover_for_fpt))
          if (auto sol = fpt_minimize(g, tau, budget)) return *sol;
      } catch (const BudgetExceeded&) {
      }
      try {
        if (auto sol = solve_edge_brute(g, g.edge_count(), tau, budget)) return *sol;
      } catch (const TooLarge&) {
      }
      throw NoApplicableSolver("no exact edge-deletion backend fits this instance within budget");
    }
  }
  throw Error("minimize_edge_deletions: unreachable");
}

std::optional<EdgeSolution> decide_edge(const Graph& g, int k, const Rational& tau,
                                        EdgeSolverKind kind, const Budget& budget) {
  if (k < 0) return std::nullopt;
  if (kind == EdgeSolverKind::FptVc) return solve_edge_fpt_vc(g, k, tau, budget);
  if (kind == EdgeSolverKind::Brute) return solve_edge_brute(g, k, tau, budget);
  if (kind == EdgeSolverKind::Auto) {
    ClassReport report = classify(g);
    std::optional<EdgeSolution> optimum;
    if (report.is_clique)
      optimum = solve_edge_clique(g.vertex_count(), tau);
    else if (report.is_forest)
      optimum = solve_edge_tree(g, tau);
    else
      optimum = solve_edge_interval(g, tau);
    if (optimum) {
      if (static_cast<int>(optimum->deleted.size()) <= k) return optimum;
      return std::nullopt;
    }
    // dense mid-range instance: decision backends take k directly
    if (cover_within(g, budget.max_cover_for_fpt)) return solve_edge_fpt_vc(g, k, tau, budget);
    try {
      return solve_edge_brute(g, k, tau, budget);
    } catch (const TooLarge&) {
      throw NoApplicableSolver("no exact edge-deletion backend fits this instance within budget");
    }
  }
  EdgeSolution optimum = minimize_edge_deletions(g, tau, kind, budget);
  if (static_cast<int>(optimum.deleted.size()) <= k) return optimum;
  return std::nullopt;
}

std::pair<Rational, EdgeSolution> minimize_density(const Graph& g, int k, EdgeSolverKind kind,
                                                   const Budget& budget) {
  std::vector<Rational> lattice = density_lattice(g);
  // smallest achievable value: feasibility is monotone along the lattice
  size_t lo = 0, hi = lattice.size() - 1;
  std::optional<EdgeSolution> best = decide_edge(g, k, lattice[hi], kind, budget);
  if (!best) throw Error("minimize_density: maximal density must be feasible");
  while (lo < hi) {
    size_t mid = lo + (hi - lo) / 2;
    if (auto sol = decide_edge(g, k, lattice[mid], kind, budget)) {
      best = std::move(sol);
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return {lattice[hi], std::move(*best)};
}

}  // namespace bded
