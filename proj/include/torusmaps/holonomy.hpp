#pragma once

#include <optional>
#include <vector>

#include "torusmaps/cone_metric.hpp"
#include "torusmaps/lattice.hpp"
#include "torusmaps/report.hpp"
#include "torusmaps/surface_map.hpp"

// Exact developments of equilateral torus maps.  Every face is placed in the
// plane as a canonical unit n-gon moved by a LatticeMotion; gluing across a
// dual spanning tree determines all frames from face 0, and the leftover
// motion across each co-tree edge is the holonomy of the loop that crosses
// it.  All arithmetic stays in the ring.

namespace torusmaps {

// A loop in the dual graph, recorded by the darts it crosses.  Crossing dart
// d moves from the face containing d into the face containing twin(d), so
// consecutive crossings c, c' satisfy face(twin c) == face(c').
struct DualLoop {
  std::vector<Dart> crossings;
};

DualLoop inverse_loop(const DualLoop& loop);
DualLoop concat_loops(const DualLoop& first, const DualLoop& second);

struct Development {
  SurfaceMap map;  // sign-free encoding
  Family family = Family::Triangulation;
  Ring ring = Ring::Eisenstein;
  int lattice_order = 6;
  Orbits vertices;
  Orbits faces;
  std::vector<LatticeMotion> face_frame;       // face id -> placement of its n-gon
  std::vector<LatticePoint> dart_corner;       // dart -> developed start vertex
  std::vector<int> dart_direction;             // dart -> unit index 0..N-1
  std::vector<char> edge_in_tree;              // edge -> crossed by the dual tree
  std::vector<LatticeMotion> crossing_motion;  // dart d -> holonomy of the loop
                                               // through the tree that crosses d
  std::vector<Dart> parent_crossing;           // face -> dart crossed from its
                                               // tree parent (-1 at the root)
  int root_face = 0;

  int face_of(Dart d) const { return faces.id_of[d]; }
  LatticePoint dart_vector(Dart d) const;
  // Even dart of every edge not crossed by the dual tree, ascending.
  std::vector<Dart> cotree_darts() const;
};

// Requires a connected orientable map with chi = 0 whose faces all have the
// family's size.  Deterministic: the dual tree grows by BFS from the face
// containing dart 0, scanning each face's darts in increasing order.
Development develop(const SurfaceMap& m, Family family);

struct HolonomyGroup {
  int lattice_order = 6;
  int divisor = 6;  // gcd of N and all crossing-motion rotations
  std::vector<DualLoop> generator_loops;  // one loop attaining the generator
                                          // rotation; empty for the trivial group
  int order() const { return lattice_order / divisor; }
};

HolonomyGroup holonomy_group(const Development& dev);
HolonomyGroup holonomy_group(const SurfaceMap& m, Family family);

// Composes crossing motions along the loop; the result is conjugation-
// normalized to a base frame only through the development's frames, so
// concatenation satisfies h(first * second) = compose(h(first), h(second)).
LatticeMotion loop_holonomy(const Development& dev, const DualLoop& loop);

// Closed loop through the dual tree that crosses exactly one co-tree dart.
DualLoop cotree_generator_loop(const Development& dev, Dart crossing);

// Minimal dual loop encircling a vertex, crossing each star dart once.
DualLoop vertex_star_loop(const Development& dev, int vertex_id);

// Dual loop encircling a face through the corner fans of its vertices.
// Throws when the face closure touches itself (no embedded encircling loop).
DualLoop face_encircling_loop(const Development& dev, int face_id);

struct FundamentalPair {
  DualLoop alpha_loop, beta_loop;
  LatticeMotion alpha, beta, commutator;  // commutator = a b a^-1 b^-1
};

// Two dual loops whose classes generate the torus homology, preferring pairs
// whose motions do not commute (flat maps have none; then any basis is
// returned and the commutator is the identity).
FundamentalPair fundamental_pair_holonomy(const Development& dev);

struct TranslationLattice {
  LatticePoint u, v;     // Hermite-form basis of the image of h
  std::int64_t det = 0;  // |det(u, v)| in ring coordinates
  std::int64_t index = 0;  // relative to the full symmetry lattice of the tiling
};

// Present exactly when the rotational holonomy is trivial.
std::optional<TranslationLattice> translation_lattice(const Development& dev);

// Determinant of the symmetry translation lattice of the family's tiling in
// ring coordinates (1 for triangles and squares, 3 for hexagons).
std::int64_t tiling_lattice_det(Family f);

// Walk in the plane: unit step, then left turn by turns[i] units of 2pi/N.
// Returns the motion carrying the start frame to the end frame.
LatticeMotion develop_walk(const std::vector<int>& turns, Family family);

// Checks the bicolorability <=> holonomy-subgroup equivalence on one map by
// computing both sides independently.
Report lemma2_crosscheck(const SurfaceMap& m, Family family);

}  // namespace torusmaps
