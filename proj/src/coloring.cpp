#include "torusmaps/coloring.hpp"

#include <deque>

namespace torusmaps {

const char* coloring_kind_name(ColoringKind k) {
  switch (k) {
    case ColoringKind::Vertex2: return "vertex2";
    case ColoringKind::Face2: return "face2";
    case ColoringKind::EdgeAlternating: return "edge-alternating";
  }
  return "?";
}

namespace {

// BFS 2-coloring with an explicit simple odd cycle on failure, built from the
// two BFS tree paths up to their lowest common ancestor.
struct BfsColorer {
  const Graph& g;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, edge)
  std::vector<int> color, parent, parent_edge, depth;

  explicit BfsColorer(const Graph& graph)
      : g(graph), adj(g.vertex_count), color(g.vertex_count, -1), parent(g.vertex_count, -1),
        parent_edge(g.vertex_count, -1), depth(g.vertex_count, 0) {
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edges[e];
      adj[u].emplace_back(v, e);
      if (u != v) adj[v].emplace_back(u, e);
    }
  }

  OddCycle cycle_through(int u, int v, int closing_edge) const {
    std::vector<int> pu{u}, pv{v};
    int x = u, y = v;
    while (depth[x] > depth[y]) pu.push_back(x = parent[x]);
    while (depth[y] > depth[x]) pv.push_back(y = parent[y]);
    while (x != y) {
      pu.push_back(x = parent[x]);
      pv.push_back(y = parent[y]);
    }
    // pu = u..lca and pv = v..lca share only the lca; both ends have the same
    // color, so the closed walk below has odd length.
    OddCycle c;
    for (std::size_t i = 0; i + 1 < pu.size(); ++i) {
      c.nodes.push_back(pu[i]);
      c.edges.push_back(parent_edge[pu[i]]);
    }
    c.nodes.push_back(x);
    for (std::size_t i = pv.size() - 1; i-- > 0;) {
      c.edges.push_back(parent_edge[pv[i]]);
      c.nodes.push_back(pv[i]);
    }
    c.edges.push_back(closing_edge);
    return c;
  }

  TwoColoringResult run(ColoringKind kind) {
    TwoColoringResult res;
    res.constraint_graph = g;
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edges[e];
      if (u == v) {
        res.obstruction = OddCycle{{u}, {e}};
        return res;
      }
    }
    for (int s = 0; s < g.vertex_count; ++s) {
      if (color[s] >= 0) continue;
      color[s] = 0;
      std::deque<int> queue{s};
      while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (auto [v, e] : adj[u]) {
          if (color[v] < 0) {
            color[v] = 1 - color[u];
            parent[v] = u;
            parent_edge[v] = e;
            depth[v] = depth[u] + 1;
            queue.push_back(v);
          } else if (color[v] == color[u]) {
            res.obstruction = cycle_through(u, v, e);
            return res;
          }
        }
      }
    }
    res.coloring = Coloring{kind, color};
    return res;
  }
};

// Constraint graph for edge-alternating colorings: one node per map edge, one
// constraint edge per face corner joining the edges of consecutive darts.
Graph corner_graph(const SurfaceMap& m) {
  Graph g;
  g.name = m.name + "-corners";
  g.vertex_count = m.edge_count;
  for (Dart d = 0; d < m.dart_count(); ++d)
    g.edges.emplace_back(d >> 1, m.phi(d) >> 1);
  return g;
}

}  // namespace

TwoColoringResult two_colorings(const SurfaceMap& m, ColoringKind kind) {
  if (m.has_negative_sign())
    throw MapError("two_colorings expects an orientably encoded map");
  Graph constraint;
  switch (kind) {
    case ColoringKind::Vertex2:
      constraint = skeleton(m);
      break;
    case ColoringKind::Face2:
      constraint = skeleton(dual_map(m));
      break;
    case ColoringKind::EdgeAlternating:
      constraint = corner_graph(m);
      break;
  }
  return BfsColorer(constraint).run(kind);
}

}  // namespace torusmaps
