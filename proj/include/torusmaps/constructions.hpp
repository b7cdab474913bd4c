#pragma once

#include <string>
#include <vector>

#include "torusmaps/cone_metric.hpp"
#include "torusmaps/graph.hpp"
#include "torusmaps/lattice.hpp"
#include "torusmaps/surface_map.hpp"

namespace torusmaps {

// Finite-index sublattice of the symmetry translations of a regular tiling.
struct LatticeBasis {
  Ring ring = Ring::Eisenstein;
  LatticePoint u, v;
};

// Quotient of the infinite regular tiling of the family by the span of the
// basis.  For hexangulations the basis must preserve the two vertex classes
// (both vectors with a == b mod 3).  Vertex count: det for triangulations and
// quadrangulations, 2*det/3 for hexangulations.
SurfaceMap lattice_quotient(const LatticeBasis& basis, Family family);

// Edge-midpoint refinement (triangulations: each triangle into four) or
// face-and-edge subdivision (quadrangulations: each square into four).  Old
// vertices keep their degree; every new vertex is regular.
SurfaceMap refine(const SurfaceMap& m, Family family);

// Replaces the diagonal of the two triangles beside the edge.  Errors when
// one face bounds the edge on both sides or the triangles share a second
// edge (no quadrilateral to re-diagonalize).
SurfaceMap flip_edge(const SurfaceMap& m, int edge);

// Removes edge ij and inserts edge ik; requires ij present, k not adjacent
// to i, and i, j, k distinct.
Graph graph_edge_swap(const Graph& g, int i, int j, int k);

// Fixed example maps, shipped as MAP files in the data directory (override
// with the TORUSMAPS_DATA environment variable).
SurfaceMap catalogue(const std::string& name);
const std::vector<std::string>& catalogue_names();

}  // namespace torusmaps
