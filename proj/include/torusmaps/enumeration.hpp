#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "torusmaps/cone_metric.hpp"
#include "torusmaps/report.hpp"
#include "torusmaps/surface_map.hpp"

// Isomorph-free exhaustive generation of torus maps under degree constraints,
// plus the verification harness that checks the non-existence and coloring
// statements over every generated map.

namespace torusmaps {

struct EnumSpec {
  Family family = Family::Triangulation;
  int max_vertices = 1;
  // Degree profile: absent = unconstrained; otherwise the multiset of
  // exceptional degrees, with every remaining vertex regular.
  std::optional<std::vector<int>> exceptional_degrees;
  bool orientable_only = true;  // signed enumeration is not supported
  long long node_budget = 0;    // search nodes; 0 = unlimited
  double budget_seconds = 0.0;  // wall clock; 0 = unlimited
  int threads = 1;              // > 1 explores top-level branches in parallel
};

struct EnumOutcome {
  long long classes = 0;  // isomorphism classes visited
  long long nodes = 0;    // search nodes explored
  bool complete = true;   // false when a budget cut the search short
  double seconds = 0.0;
};

// Visits exactly one representative per isomorphism class of connected maps
// with all faces of the family's size, chi = 0, V <= max_vertices, and the
// requested degree profile.  Single-threaded runs visit in a fixed
// deterministic order; multi-threaded runs visit the same class set in
// unspecified order (the callback must then be thread-safe).
EnumOutcome enumerate_maps(const EnumSpec& spec,
                           const std::function<void(const SurfaceMap&)>& visit);

// Reference enumerator for tiny sizes: tries every perfect matching of the
// dart slots with no pruning, no forcing, and no symmetry reduction, then
// filters and deduplicates.  Returns one representative per class, ordered by
// canonical form.
std::vector<SurfaceMap> enumerate_maps_bruteforce(const EnumSpec& spec);

// T1: no 5,7-triangulation.           T2: no 3,5-quadrangulation.
// T3: 2,4-hexangulations are never vertex-2-colorable.
// T4: 4,8-triangulations never have a bipartite dual (face 2-coloring).
// T5: 2,6-quadrangulations never admit an alternating edge 2-coloring.
// HOL: two-cone-point tori with curvature units +-N/n' have holonomy group
//      strictly containing C_{n'} (and the forced exact orders).
// L2: 2-colorability agrees with the holonomy bound on every map.
// T6: regular maps are lattice quotients (trivial holonomy, index V/V_min).
enum class TheoremId { T1, T2, T3, T4, T5, HOL, L2, T6 };

std::optional<TheoremId> parse_theorem_id(const std::string& text);
const char* theorem_id_name(TheoremId id);

struct VerifyOptions {
  int max_vertices = 0;  // 0 = the statement's default desk-scale slice
  long long node_budget = 0;
  double budget_seconds = 0.0;
  int threads = 1;
};

struct VerifyOutcome {
  Report report;
  bool passed = false;    // the statement held on everything enumerated
  bool complete = true;   // false when budgets truncated a slice
  double seconds = 0.0;
};

VerifyOutcome verify_theorem(TheoremId id, const VerifyOptions& options = {});

}  // namespace torusmaps
