#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "torusmaps/canonical.hpp"
#include "torusmaps/cone_metric.hpp"
#include "torusmaps/constructions.hpp"
#include "torusmaps/graph.hpp"
#include "torusmaps/holonomy.hpp"
#include "torusmaps/surface_map.hpp"

using namespace torusmaps;

namespace {

std::map<int, int> degree_histogram(const SurfaceMap& m) {
  std::map<int, int> h;
  for (const auto& orbit : vertex_orbits(m).members) ++h[static_cast<int>(orbit.size())];
  return h;
}

}  // namespace

TEST_CASE("the shipped catalogue") {
  const struct {
    const char* name;
    int v, e, f;
    bool orientable;
    std::map<int, int> degrees;
  } expected[] = {
      {"fig1a", 1, 3, 2, true, {{6, 1}}},
      {"fig1b", 2, 6, 4, true, {{6, 2}}},
      {"fig1c-1", 3, 9, 6, true, {{6, 3}}},
      {"fig1c-2", 3, 9, 6, true, {{6, 3}}},
      {"fig2a", 4, 12, 8, true, {{5, 2}, {7, 2}}},
      {"fig2b", 5, 15, 10, false, {{5, 1}, {6, 3}, {7, 1}}},
      {"fig3a", 2, 6, 4, true, {{4, 1}, {8, 1}}},
      {"fig3b", 2, 6, 4, true, {{3, 1}, {9, 1}}},
      {"fig3c", 2, 6, 4, true, {{2, 1}, {10, 1}}},
      {"fig3d", 2, 6, 4, true, {{1, 1}, {11, 1}}},
      {"fig4a", 2, 4, 2, true, {{2, 1}, {6, 1}}},
      {"fig4b", 7, 14, 7, true, {{3, 2}, {4, 3}, {5, 2}}},
      {"fig5a", 2, 3, 1, true, {{2, 1}, {4, 1}}},
      {"fig5b", 2, 3, 1, true, {{1, 1}, {5, 1}}},
      {"fig5c", 4, 6, 2, true, {{1, 1}, {3, 2}, {5, 1}}},
  };

  SUBCASE("names, counts, degrees, and Euler characteristic") {
    CHECK(catalogue_names().size() == 15);
    for (const auto& c : expected) {
      CAPTURE(c.name);
      CHECK(std::count(catalogue_names().begin(), catalogue_names().end(),
                       std::string(c.name)) == 1);
      const SurfaceMap m = catalogue(c.name);
      CHECK(m.name == c.name);
      const SurfaceStats s = classify_surface(m);
      CHECK(s.vertices == c.v);
      CHECK(s.edges == c.e);
      CHECK(s.faces == c.f);
      CHECK(s.chi == 0);
      CHECK(s.orientable == c.orientable);
      CHECK(degree_histogram(m) == c.degrees);
    }
  }
  SUBCASE("unknown names are rejected") {
    CHECK_THROWS_AS(catalogue("nope"), MapError);
  }
  SUBCASE("the two three-vertex regular triangulations are distinct") {
    CHECK_FALSE(maps_isomorphic(catalogue("fig1c-1"), catalogue("fig1c-2")));
  }
}

TEST_CASE("lattice quotients of the regular tilings") {
  SUBCASE("unit square basis gives the standard one-vertex triangulation") {
    const SurfaceMap q =
        lattice_quotient({Ring::Eisenstein, {1, 0}, {0, 1}}, Family::Triangulation);
    const SurfaceStats s = classify_surface(q);
    CHECK(s.vertices == 1);
    CHECK(s.chi == 0);
    CHECK(maps_isomorphic(q, catalogue("fig1a")));
  }
  SUBCASE("square quotients are regular with det vertices") {
    for (int n = 1; n <= 4; ++n) {
      CAPTURE(n);
      const SurfaceMap q =
          lattice_quotient({Ring::Gaussian, {n, 0}, {0, n}}, Family::Quadrangulation);
      const SurfaceStats s = classify_surface(q);
      CHECK(s.vertices == n * n);
      CHECK(s.edges == 2 * n * n);
      CHECK(s.chi == 0);
      CHECK(degree_histogram(q) == std::map<int, int>{{4, n * n}});
    }
  }
  SUBCASE("hexangulation bases must preserve the bipartition") {
    CHECK_THROWS_AS(
        lattice_quotient({Ring::Eisenstein, {1, 0}, {0, 1}}, Family::Hexangulation),
        MapError);
    const SurfaceMap q =
        lattice_quotient({Ring::Eisenstein, {9, 0}, {0, 9}}, Family::Hexangulation);
    const SurfaceStats s = classify_surface(q);
    CHECK(s.vertices == 54);  // 2 * det / 3
    CHECK(s.chi == 0);
    CHECK(degree_histogram(q) == std::map<int, int>{{3, 54}});
  }
  SUBCASE("degenerate bases are rejected") {
    CHECK_THROWS_AS(
        lattice_quotient({Ring::Eisenstein, {2, 1}, {4, 2}}, Family::Triangulation),
        MapError);
  }
}

TEST_CASE("edge-midpoint refinement") {
  SUBCASE("counts quadruple the faces") {
    const struct {
      const char* name;
      Family family;
      int v, e, f;
    } expected[] = {{"fig1a", Family::Triangulation, 4, 12, 8},
                    {"fig3a", Family::Triangulation, 8, 24, 16},
                    {"fig4a", Family::Quadrangulation, 8, 16, 8}};
    for (const auto& c : expected) {
      CAPTURE(c.name);
      const SurfaceMap r = refine(catalogue(c.name), c.family);
      const SurfaceStats s = classify_surface(r);
      CHECK(s.vertices == c.v);
      CHECK(s.edges == c.e);
      CHECK(s.faces == c.f);
      CHECK(s.chi == 0);
      CHECK(s.orientable);
    }
  }
  SUBCASE("old vertices keep their degree; new vertices are regular") {
    const SurfaceMap r = refine(catalogue("fig3a"), Family::Triangulation);
    CHECK(degree_histogram(r) == std::map<int, int>{{4, 1}, {6, 6}, {8, 1}});
    const SurfaceMap rq = refine(catalogue("fig4a"), Family::Quadrangulation);
    CHECK(degree_histogram(rq) == std::map<int, int>{{2, 1}, {4, 6}, {6, 1}});
  }
  SUBCASE("refining preserves the holonomy order") {
    // Subdividing does not change the metric, only the combinatorics.
    const struct {
      const char* name;
      Family family;
      int order;
    } expected[] = {{"fig1a", Family::Triangulation, 1},
                    {"fig3a", Family::Triangulation, 6},
                    {"fig4a", Family::Quadrangulation, 4}};
    for (const auto& c : expected) {
      CAPTURE(c.name);
      const SurfaceMap r = refine(catalogue(c.name), c.family);
      CHECK(holonomy_group(r, c.family).order() == c.order);
    }
  }
  SUBCASE("hexangulations cannot be refined this way") {
    CHECK_THROWS_AS(refine(catalogue("fig5a"), Family::Hexangulation), MapError);
  }
}

TEST_CASE("diagonal flips") {
  SUBCASE("flipping any edge of the one-vertex triangulation is degenerate") {
    const SurfaceMap m = catalogue("fig1a");
    for (int e = 0; e < m.edge_count; ++e) {
      CAPTURE(e);
      CHECK_THROWS_AS(flip_edge(m, e), MapError);
    }
  }
  SUBCASE("a flip in the refined one-vertex triangulation reaches the 5,7 map") {
    const SurfaceMap r = refine(catalogue("fig1a"), Family::Triangulation);
    const SurfaceMap target = catalogue("fig2a");
    int reaching = 0;
    for (int e = 0; e < r.edge_count; ++e) {
      const SurfaceMap flipped = flip_edge(r, e);
      const SurfaceStats s = classify_surface(flipped);
      CHECK(s.chi == 0);
      CHECK(s.edges == r.edge_count);
      if (maps_isomorphic(flipped, target)) ++reaching;
    }
    CHECK(reaching == 12);  // the refined map is edge-transitive enough
  }
  SUBCASE("flipping twice returns an isomorphic map") {
    const SurfaceMap r = refine(catalogue("fig1a"), Family::Triangulation);
    const SurfaceMap once = flip_edge(r, 0);
    int back = 0;
    for (int e = 0; e < once.edge_count; ++e) {
      SurfaceMap again;
      try {
        again = flip_edge(once, e);
      } catch (const MapError&) {
        continue;
      }
      if (maps_isomorphic(again, r)) ++back;
    }
    CHECK(back >= 1);
  }
}

TEST_CASE("graph edge swaps") {
  Graph g;
  g.name = "path4plus";
  g.vertex_count = 4;
  g.edges = {{0, 1}, {1, 2}, {2, 3}};
  SUBCASE("removes ij, inserts ik") {
    const Graph h = graph_edge_swap(g, 0, 1, 2);
    CHECK(h.vertex_count == 4);
    REQUIRE(h.edges.size() == 3);
    CHECK(std::count(h.edges.begin(), h.edges.end(), std::pair<int, int>{0, 2}) +
              std::count(h.edges.begin(), h.edges.end(), std::pair<int, int>{2, 0}) ==
          1);
    CHECK(std::count(h.edges.begin(), h.edges.end(), std::pair<int, int>{0, 1}) +
              std::count(h.edges.begin(), h.edges.end(), std::pair<int, int>{1, 0}) ==
          0);
    CHECK(h.name == "path4plus-swap");
  }
  SUBCASE("error cases") {
    CHECK_THROWS_AS(graph_edge_swap(g, 0, 2, 3), MapError);  // 02 not present
    CHECK_THROWS_AS(graph_edge_swap(g, 1, 2, 0), MapError);  // 10 already present
    CHECK_THROWS_AS(graph_edge_swap(g, 0, 1, 1), MapError);  // k = j
    CHECK_THROWS_AS(graph_edge_swap(g, 0, 1, 0), MapError);  // k = i
  }
}
