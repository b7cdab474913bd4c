#pragma once

#include <optional>
#include <string>

#include "torusmaps/graph.hpp"
#include "torusmaps/report.hpp"
#include "torusmaps/surface_map.hpp"

namespace torusmaps {

// Toroidality certificates.  The counting route: a connected graph with
// average degree k and girth at least 2k/(k-2) can only embed in the torus
// as a map whose faces are all 2k/(k-2)-gon disks, because
// 0 = chi <= 2E(1/k - 1/2 + (k-2)/2k) holds with equality exactly when every
// face is a disk with the minimum side count.  Three degree patterns then
// land on maps that provably do not exist, so the graph is not toroidal:
//   case a: degrees {5, 6^m, 7}, girth >= 3  (no 5,7-triangulation)
//   case b: degrees {3, 4^m, 5}, girth >= 4  (no 3,5-quadrangulation)
//   case c: degrees {2, 3^m, 4}, bipartite, girth >= 6
//           (no 2,4-hexangulation with bipartite skeleton)
// The search route instead looks for an explicit rotation system of genus
// at most a cap and returns it as a self-validating witness; when the cap is
// at least 1 and the exhaustive search comes up empty, that is itself a
// non-toroidality proof (every torus embedding is some rotation system).

enum class CertVerdict {
  NonToroidalByTheorem,  // counting pattern fired
  NonToroidalBySearch,   // exhaustive rotation-system search, cap >= 1
  ToroidalWithWitness,
  Unknown
};

std::string cert_verdict_name(CertVerdict v);

struct Certificate {
  CertVerdict verdict = CertVerdict::Unknown;
  char counting_case = 0;  // 'a', 'b' or 'c' when the counting argument fires
  std::string reasoning;
  std::string graph_name;
  int vertices = 0;
  int edges = 0;
  std::optional<int> girth_value;  // absent for acyclic graphs
  int forced_face_size = 0;        // 2k/(k-2) when the counting argument fires
  std::optional<SurfaceMap> witness;  // embedding attached by the search route
};

// Counting argument only; never searches.  Returns Unknown when no pattern
// applies (the caller may fall back to min_genus_search).
Certificate certify_non_toroidal(const Graph& g);

struct GenusSearchOptions {
  int genus_cap = 1;
  long long node_budget = 4'000'000'000'000LL;
  double budget_seconds = 600.0;
};

enum class GenusSearchStatus { WitnessFound, ExhaustedNoEmbedding, BudgetExceeded };

std::string genus_search_status_name(GenusSearchStatus s);

struct GenusSearchResult {
  GenusSearchStatus status = GenusSearchStatus::BudgetExceeded;
  std::optional<SurfaceMap> witness;  // rotation system with genus <= cap
  int witness_genus = -1;
  long long nodes = 0;
  double seconds = 0.0;
  std::string note;  // set when the side-count bound settles the cap upfront
};

// Branch-and-bound over rotation systems of g, looking for one with
// F >= E - V + 2 - 2*genus_cap faces (equivalently genus <= genus_cap).
// Deterministic; single-threaded; requires at least one edge.
GenusSearchResult min_genus_search(const Graph& g,
                                   const GenusSearchOptions& options = {});

// Counting argument first; on Unknown, fall back to the rotation-system
// search.  A witness of genus <= 1 upgrades the verdict to
// toroidal-with-witness; a search exhausted at genus_cap >= 1 upgrades it to
// non-toroidal-by-search.  Exhaustion at cap 0 only rules out the plane, so
// the verdict stays Unknown; a budget cut also leaves Unknown.
Certificate certify_with_search(const Graph& g,
                                const GenusSearchOptions& options = {});

Report certificate_report(const Certificate& c);
Report genus_search_report(const Graph& g, const GenusSearchResult& r);

}  // namespace torusmaps
