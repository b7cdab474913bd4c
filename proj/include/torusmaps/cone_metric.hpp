#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torusmaps/lattice.hpp"
#include "torusmaps/report.hpp"
#include "torusmaps/surface_map.hpp"

// Equilateral cone metrics: giving every k-gon face the shape of a unit
// regular euclidean k-gon makes a degree-k vertex a cone point of curvature
// 2pi * (1 - k/kbar), where kbar is the regular degree of the family.  All
// curvature is kept as an integer number of 2pi/N turns.

namespace torusmaps {

enum class Family { Triangulation, Quadrangulation, Hexangulation };

const char* family_name(Family f);
std::optional<Family> parse_family(const std::string& text);
int family_face_size(Family f);     // 3, 4, 6
int family_regular_degree(Family f);  // 6, 4, 3
Ring family_ring(Family f);         // eisenstein for 3- and 6-gons, gaussian for 4-gons
int family_lattice_order(Family f);  // rotation order N of the ring

// Curvature of a degree-k vertex in units of 2pi/N; always an integer.
int curvature_units_for_degree(Family f, int degree);

struct DegreeProfile {
  std::map<int, int> vertex_degrees;  // degree -> count
  std::map<int, int> face_lengths;    // length -> count
  int chi = 0;
};

DegreeProfile degree_profiles(const SurfaceMap& m);

// Verifies the combinatorial counting relations on a profile:
//   (1) sum (kbar - k) v_k = kbar * chi       (all faces n-gons of the family)
//   (2) sum (4 - k) p_k + sum (4 - k) v_k = 4 * chi
//   (3) sum over k != 4 of k * p_k and of k * v_k are both even.
// Each line of the report carries the residual; family nullopt skips (1).
Report check_counting_relations(const DegreeProfile& dp, std::optional<Family> family);

struct ConeStructure {
  Family family = Family::Triangulation;
  int lattice_order = 6;
  std::vector<int> curvature_units;  // per vertex orbit id
  std::vector<int> cone_vertices;    // vertex ids with nonzero curvature
  // When the map has exactly two cone points with curvature +-N/n_prime for
  // an integer n_prime >= 2; otherwise the two-cone-point analysis of the
  // holonomy bound does not apply.
  std::optional<int> n_prime;
};

// Requires every face to have exactly family_face_size(f) sides.
ConeStructure cone_points(const SurfaceMap& m, Family f);

}  // namespace torusmaps
