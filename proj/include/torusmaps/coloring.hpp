#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torusmaps/graph.hpp"
#include "torusmaps/surface_map.hpp"

namespace torusmaps {

enum class ColoringKind { Vertex2, Face2, EdgeAlternating };

const char* coloring_kind_name(ColoringKind k);

// assignment[i] in {0,1} is indexed by vertex id, face id, or edge id
// depending on the kind.
struct Coloring {
  ColoringKind kind;
  std::vector<int> assignment;
};

// An odd closed walk in the constraint graph: nodes[i] and nodes[i+1 mod L]
// are joined by edges[i]; L is odd.  A loop is the length-1 case.
struct OddCycle {
  std::vector<int> nodes;
  std::vector<int> edges;
};

struct TwoColoringResult {
  std::optional<Coloring> coloring;
  std::optional<OddCycle> obstruction;
  // The constraint graph the result refers to: vertices are map vertices,
  // faces, or edges depending on the kind.
  Graph constraint_graph;
};

// vertex2: proper 2-coloring of the skeleton.  face2: proper 2-coloring of
// the dual skeleton.  edge-alternating: colors on edges such that
// consecutive edges around every face differ.
TwoColoringResult two_colorings(const SurfaceMap& m, ColoringKind kind);

}  // namespace torusmaps
