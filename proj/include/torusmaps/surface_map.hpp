#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Combinatorial maps as rotation systems.  Darts are 0..2E-1; the two darts
// of edge k are 2k and 2k+1 and twin(d) = d ^ 1 always.  sigma(d) is the next
// dart counterclockwise around the origin vertex of d, and faces are the
// orbits of phi = sigma o twin (twin first), which walks each face boundary
// with the face on the left.  An optional vector of edge signs encodes maps
// on non-orientable surfaces; a negative edge reverses local orientation.

namespace torusmaps {

struct MapError : std::runtime_error {
  explicit MapError(const std::string& what) : std::runtime_error(what) {}
};

using Dart = int;

constexpr Dart twin(Dart d) { return d ^ 1; }

struct SurfaceMap {
  std::string name;
  int edge_count = 0;
  std::vector<int> sigma;                       // size 2*edge_count
  std::optional<std::vector<std::int8_t>> signs;  // size edge_count, +1/-1

  int dart_count() const { return 2 * edge_count; }
  int sign_of_edge(int e) const { return signs ? (*signs)[e] : 1; }
  bool has_negative_sign() const;
  Dart phi(Dart d) const { return sigma[twin(d)]; }
};

// Throws MapError unless sigma is a permutation and signs (if present) match.
void validate_map(const SurfaceMap& m);

// Orbit partition of the darts under a permutation, orbits numbered by least
// contained dart in increasing order.
struct Orbits {
  std::vector<int> id_of;                 // dart -> orbit id
  std::vector<std::vector<Dart>> members;  // orbit id -> darts in cycle order
  int count() const { return static_cast<int>(members.size()); }
};

Orbits vertex_orbits(const SurfaceMap& m);
// Orbits of phi; only meaningful when no negative signs are present.
Orbits face_orbits(const SurfaceMap& m);

// Number of sides of every face, ascending.  Works for signed maps too.
std::vector<int> face_length_list(const SurfaceMap& m);

struct SurfaceStats {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int chi = 0;
  bool orientable = true;
  int genus = 0;  // orientable genus, or cross-cap count when non-orientable
};

SurfaceStats classify_surface(const SurfaceMap& m);

bool is_connected(const SurfaceMap& m);

// Text format:
//   map <name>
//   edges <E>
//   sigma <2E integers>
//   signs <E characters from +->   (optional)
// '#' starts a comment line; blank lines are ignored.
SurfaceMap parse_map(const std::string& text);
std::string serialize_map(const SurfaceMap& m);

// The dual exchanges vertices and faces over the same edge set.  Applying it
// twice returns the identical map.  Rejects maps with negative signs.
SurfaceMap dual_map(const SurfaceMap& m);

// Equivalent sign-free encoding of an orientable signed map, produced by
// reversing the rotation at every vertex on the negative side of a balanced
// orientation.  Throws MapError when the map is non-orientable.
SurfaceMap orient_positively(const SurfaceMap& m);

}  // namespace torusmaps
