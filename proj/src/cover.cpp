#include "bded/cover.hpp"

#include <algorithm>
#include <map>

#include "bded/errors.hpp"

namespace bded {

namespace {

struct CoverSearch {
  const Graph& g;
  std::vector<char> removed;
  std::vector<int> deg;
  std::vector<VertexId> current;
  VertexSet best;
  bool have_best = false;

  explicit CoverSearch(const Graph& graph) : g(graph), removed(graph.vertex_count(), 0), deg(graph.vertex_count()) {
    for (VertexId v = 0; v < graph.vertex_count(); ++v) deg[v] = graph.degree(v);
  }

  void take(VertexId v, std::vector<VertexId>& log) {
    removed[v] = 1;
    log.push_back(v);
    for (VertexId w : g.neighbors(v))
      if (!removed[w]) --deg[w];
  }

  void undo(std::vector<VertexId>& log, size_t mark) {
    while (log.size() > mark) {
      VertexId v = log.back();
      log.pop_back();
      removed[v] = 0;
      for (VertexId w : g.neighbors(v))
        if (!removed[w]) ++deg[w];
    }
  }

  void search() {
    if (have_best && current.size() >= best.size()) return;
    // Pick a max-degree live vertex; degree-1 vertices are handled by the
    // neighbor branch being at least as good.
    VertexId pick = -1;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (removed[v] || deg[v] == 0) continue;
      if (pick == -1 || deg[v] > deg[pick]) pick = v;
    }
    if (pick == -1) {  // edgeless: current is a cover
      best = VertexSet(current.begin(), current.end());
      canonicalize(best);
      have_best = true;
      return;
    }
    std::vector<VertexId> log;
    // Branch 1: pick joins the cover.
    size_t mark = log.size();
    take(pick, log);
    current.push_back(pick);
    search();
    current.pop_back();
    undo(log, mark);
    // Branch 2: all live neighbors of pick join the cover.
    std::vector<VertexId> nbrs;
    for (VertexId w : g.neighbors(pick))
      if (!removed[w]) nbrs.push_back(w);
    mark = log.size();
    take(pick, log);
    for (VertexId w : nbrs) {
      take(w, log);
      current.push_back(w);
    }
    search();
    for (size_t i = 0; i < nbrs.size(); ++i) current.pop_back();
    undo(log, mark);
  }
};

}  // namespace

VertexSet min_vertex_cover(const Graph& g) {
  CoverSearch search(g);
  search.search();
  return search.best;
}

bool is_vertex_cover(const Graph& g, const VertexSet& cover) {
  for (const auto& [u, v] : g.edges())
    if (!set_contains(cover, u) && !set_contains(cover, v)) return false;
  return true;
}

bool TwinClassPartition::is_obtainable(int i, int j) const {
  return std::binary_search(obtainable.begin(), obtainable.end(), std::pair<int, int>{i, j});
}

int TwinClassPartition::cost_of(int i, int j) const {
  auto it = std::lower_bound(obtainable.begin(), obtainable.end(), std::pair<int, int>{i, j});
  if (it == obtainable.end() || *it != std::pair<int, int>{i, j}) return -1;
  return cost[static_cast<size_t>(it - obtainable.begin())];
}

TwinClassPartition twin_classes(const Graph& g, const VertexSet& cover) {
  if (!is_vertex_cover(g, cover))
    throw InvalidArgument("twin_classes: given set is not a vertex cover");
  TwinClassPartition part;
  part.cover = cover;
  canonicalize(part.cover);
  std::map<VertexSet, VertexSet> by_signature;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (set_contains(part.cover, v)) continue;
    by_signature[g.neighbors(v)].push_back(v);
  }
  for (auto& [sig, members] : by_signature)
    part.classes.push_back({sig, members});
  int count = static_cast<int>(part.classes.size());
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      const auto& big = part.classes[i].signature;
      const auto& small = part.classes[j].signature;
      if (std::includes(big.begin(), big.end(), small.begin(), small.end())) {
        part.obtainable.push_back({i, j});
        part.cost.push_back(static_cast<int>(big.size() - small.size()));
      }
    }
  }
  return part;
}

}  // namespace bded
