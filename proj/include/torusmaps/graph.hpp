#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torusmaps/surface_map.hpp"

namespace torusmaps {

// Abstract multigraph; loops and parallel edges allowed.
struct Graph {
  std::string name;
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  std::vector<int> degrees() const;  // loops count twice
};

// 1-skeleton of a map: vertex v of the graph is sigma-orbit v, edge k joins
// the orbits of darts 2k and 2k+1.
Graph skeleton(const SurfaceMap& m);

// Length of a shortest cycle: 1 for a loop, 2 for parallel edges, nullopt for
// a forest.
std::optional<int> girth(const Graph& g);

struct SkeletonGirth {
  Graph graph;
  std::optional<int> girth;
};
SkeletonGirth skeleton_and_girth(const SurfaceMap& m);

bool graph_connected(const Graph& g);

// 2-coloring of the vertices, or empty when an odd closed walk exists.
std::optional<std::vector<int>> bipartition(const Graph& g);

// BFS distances from a source vertex (-1 where unreachable).
std::vector<int> bfs_distances(const Graph& g, int source);

// Text format: "graph <name>" then one "u v" pair per line; '#' comments.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

}  // namespace torusmaps
