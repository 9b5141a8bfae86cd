#include "bded/flow.hpp"

#include <algorithm>
#include <limits>

#include "bded/errors.hpp"

namespace bded {

FlowNetwork::FlowNetwork(int nodes, int s, int t) : node_count(nodes), source(s), sink(t) {
  if (s == t) throw InvalidArgument("flow: source equals sink");
  if (s < 0 || t < 0 || s >= nodes || t >= nodes)
    throw InvalidArgument("flow: terminal out of range");
}

void FlowNetwork::add_arc(int tail, int head, Rational capacity) {
  if (capacity.is_negative()) throw InvalidArgument("flow: negative capacity");
  if (tail < 0 || head < 0 || tail >= node_count || head >= node_count)
    throw InvalidArgument("flow: arc endpoint out of range");
  arcs.push_back({tail, head, std::move(capacity)});
}

void FlowNetwork::add_undirected(int a, int b, Rational cap) {
  add_arc(a, b, cap);
  add_arc(b, a, std::move(cap));
}

namespace {

struct Dinic {
  struct InternalArc {
    int head;
    Rational residual;
  };

  int n;
  int s, t;
  std::vector<InternalArc> arcs;          // arc 2i+1 is the reverse of 2i
  std::vector<std::vector<int>> out;      // arc indices per node
  std::vector<int> level;
  std::vector<size_t> iter;

  Dinic(const FlowNetwork& net) : n(net.node_count), s(net.source), t(net.sink), out(n) {
    for (const auto& a : net.arcs) {
      out[a.tail].push_back(static_cast<int>(arcs.size()));
      arcs.push_back({a.head, a.capacity});
      out[a.head].push_back(static_cast<int>(arcs.size()));
      arcs.push_back({a.tail, Rational(0)});
    }
  }

  bool bfs() {
    level.assign(n, -1);
    std::vector<int> queue{s};
    level[s] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int id : out[v]) {
        const auto& a = arcs[id];
        if (!a.residual.is_zero() && level[a.head] == -1) {
          level[a.head] = level[v] + 1;
          queue.push_back(a.head);
        }
      }
    }
    return level[t] != -1;
  }

  Rational dfs(int v, const Rational& limit) {
    if (v == t) return limit;
    for (size_t& i = iter[v]; i < out[v].size(); ++i) {
      int id = out[v][i];
      auto& a = arcs[id];
      if (a.residual.is_zero() || level[a.head] != level[v] + 1) continue;
      Rational pushed = dfs(a.head, std::min(limit, a.residual));
      if (!pushed.is_zero()) {
        a.residual -= pushed;
        arcs[id ^ 1].residual += pushed;
        return pushed;
      }
    }
    return Rational(0);
  }

  Rational run() {
    Rational total(0);
    Rational cap_sum(0);
    for (size_t i = 0; i < arcs.size(); i += 2) cap_sum += arcs[i].residual;
    while (bfs()) {
      iter.assign(n, 0);
      while (true) {
        Rational pushed = dfs(s, cap_sum + Rational(1));
        if (pushed.is_zero()) break;
        total += pushed;
      }
    }
    return total;
  }

  VertexSet reachable() const {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int id : out[v]) {
        const auto& a = arcs[id];
        if (!a.residual.is_zero() && !seen[a.head]) {
          seen[a.head] = 1;
          stack.push_back(a.head);
        }
      }
    }
    VertexSet side;
    for (int v = 0; v < n; ++v)
      if (seen[v]) side.push_back(v);
    return side;
  }
};

}  // namespace

MaxFlowResult max_flow(const FlowNetwork& net) {
  Dinic dinic(net);
  Rational value = dinic.run();
  VertexSet side = dinic.reachable();
  // Max-flow equals min-cut: the cut induced by the residual-reachable set
  // must have capacity exactly `value`, and the sink must be unreachable.
  if (set_contains(side, net.sink)) throw Error("flow: augmenting path remains");
  Rational cut(0);
  for (const auto& a : net.arcs)
    if (set_contains(side, a.tail) && !set_contains(side, a.head)) cut += a.capacity;
  if (cut != value) throw Error("flow: cut capacity mismatch");
  return {std::move(value), std::move(side)};
}

}  // namespace bded
