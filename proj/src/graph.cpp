#include "torusmaps/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

namespace torusmaps {

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(vertex_count, 0);
  for (auto [u, v] : edges) {
    deg[u]++;
    deg[v]++;
  }
  return deg;
}

Graph skeleton(const SurfaceMap& m) {
  const Orbits vo = vertex_orbits(m);
  Graph g;
  g.name = m.name;
  g.vertex_count = vo.count();
  g.edges.reserve(m.edge_count);
  for (int e = 0; e < m.edge_count; ++e)
    g.edges.emplace_back(vo.id_of[2 * e], vo.id_of[2 * e + 1]);
  return g;
}

namespace {

struct Adjacency {
  // per-vertex list of (neighbor, edge id)
  std::vector<std::vector<std::pair<int, int>>> at;
  explicit Adjacency(const Graph& g) : at(g.vertex_count) {
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edges[e];
      at[u].emplace_back(v, e);
      if (u != v) at[v].emplace_back(u, e);
    }
  }
};

}  // namespace

std::optional<int> girth(const Graph& g) {
  for (auto [u, v] : g.edges)
    if (u == v) return 1;
  {
    auto sorted = g.edges;
    for (auto& e : sorted)
      if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return 2;
  }

  const Adjacency adj(g);
  int best = std::numeric_limits<int>::max();
  // BFS from every vertex; a non-tree edge closing at depths d(u), d(v) gives
  // a cycle of length d(u) + d(v) + 1 through the root.
  std::vector<int> dist(g.vertex_count), via_edge(g.vertex_count);
  for (int s = 0; s < g.vertex_count; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    via_edge[s] = -1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      if (2 * dist[u] >= best) break;
      for (auto [v, e] : adj.at[u]) {
        if (e == via_edge[u]) continue;
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          via_edge[v] = e;
          queue.push_back(v);
        } else {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

SkeletonGirth skeleton_and_girth(const SurfaceMap& m) {
  SkeletonGirth sg{skeleton(m), std::nullopt};
  sg.girth = girth(sg.graph);
  return sg;
}

bool graph_connected(const Graph& g) {
  if (g.vertex_count == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  const Adjacency adj(g);
  std::vector<int> color(g.vertex_count, -1);
  for (int s = 0; s < g.vertex_count; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (auto [v, e] : adj.at[u]) {
        (void)e;
        if (u == v) return std::nullopt;  // loop
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  const Adjacency adj(g);
  std::vector<int> dist(g.vertex_count, -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (auto [v, e] : adj.at[u]) {
      (void)e;
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

Graph parse_graph(const std::string& text) {
  Graph g;
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  int max_vertex = -1;
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    line = line.substr(pos);
    if (line[0] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string kw;
      ls >> kw;
      if (kw != "graph") throw MapError("expected 'graph <name>' on the first line");
      if (!(ls >> g.name)) throw MapError("graph name missing");
      have_header = true;
      continue;
    }
    int u, v;
    if (!(ls >> u >> v) || u < 0 || v < 0)
      throw MapError("expected an edge line 'u v' with nonnegative vertices");
    g.edges.emplace_back(u, v);
    max_vertex = std::max({max_vertex, u, v});
  }
  if (!have_header) throw MapError("empty graph text");
  g.vertex_count = max_vertex + 1;
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  os << "graph " << (g.name.empty() ? "unnamed" : g.name) << "\n";
  for (auto [u, v] : g.edges) os << u << " " << v << "\n";
  return os.str();
}

}  // namespace torusmaps
