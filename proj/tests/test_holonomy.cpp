#include <numeric>
#include <string>
#include <vector>

#include "doctest.h"
#include "torusmaps/cone_metric.hpp"
#include "torusmaps/constructions.hpp"
#include "torusmaps/holonomy.hpp"
#include "torusmaps/lattice.hpp"
#include "torusmaps/surface_map.hpp"

using namespace torusmaps;

namespace {

struct NamedMap {
  const char* name;
  Family family;
};

// All orientable catalogue maps, with the family their faces belong to.
const std::vector<NamedMap>& orientable_catalogue() {
  static const std::vector<NamedMap> maps = {
      {"fig1a", Family::Triangulation},   {"fig1b", Family::Triangulation},
      {"fig1c-1", Family::Triangulation}, {"fig1c-2", Family::Triangulation},
      {"fig2a", Family::Triangulation},   {"fig3a", Family::Triangulation},
      {"fig3b", Family::Triangulation},   {"fig3c", Family::Triangulation},
      {"fig3d", Family::Triangulation},   {"fig4a", Family::Quadrangulation},
      {"fig4b", Family::Quadrangulation}, {"fig5a", Family::Hexangulation},
      {"fig5b", Family::Hexangulation},   {"fig5c", Family::Hexangulation}};
  return maps;
}

int mod_n(int x, int n) { return (x % n + n) % n; }

}  // namespace

TEST_CASE("development places every face as a closed unit polygon") {
  for (const auto& nm : orientable_catalogue()) {
    CAPTURE(nm.name);
    const Development dev = develop(catalogue(nm.name), nm.family);
    const int n = family_face_size(nm.family);
    for (const auto& cycle : dev.faces.members) {
      REQUIRE(static_cast<int>(cycle.size()) == n);
      LatticePoint sum{0, 0};
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Dart d = cycle[i];
        const Dart next = cycle[(i + 1) % cycle.size()];
        CHECK(dev.dart_corner[next] == dev.dart_corner[d] + dev.dart_vector(d));
        CHECK(unit_index(dev.ring, dev.dart_vector(d)) == dev.dart_direction[d]);
        sum = sum + dev.dart_vector(d);
      }
      CHECK(sum.is_zero());
    }
    // Faces glued across the dual spanning tree share the edge exactly:
    // both sides develop the same segment (compare exact doubled midpoints).
    for (int e = 0; e < dev.map.edge_count; ++e) {
      if (!dev.edge_in_tree[e]) continue;
      const Dart d = 2 * e, t = 2 * e + 1;
      const LatticePoint md = dev.dart_corner[d] + dev.dart_corner[d] + dev.dart_vector(d);
      const LatticePoint mt = dev.dart_corner[t] + dev.dart_corner[t] + dev.dart_vector(t);
      CHECK(md == mt);
      CHECK(dev.dart_vector(t) == -dev.dart_vector(d));
    }
  }
}

TEST_CASE("development rejects unusable inputs") {
  CHECK_THROWS_AS(develop(catalogue("fig2b"), Family::Triangulation), MapError);
  CHECK_THROWS_AS(develop(catalogue("fig1a"), Family::Quadrangulation), MapError);
  SUBCASE("disconnected input") {
    const SurfaceMap one = catalogue("fig1a");
    SurfaceMap two;
    two.name = "two-tori";
    two.edge_count = 2 * one.edge_count;
    two.sigma.resize(2 * one.sigma.size());
    for (Dart d = 0; d < static_cast<Dart>(one.sigma.size()); ++d) {
      two.sigma[d] = one.sigma[d];
      two.sigma[d + one.sigma.size()] = one.sigma[d] + static_cast<Dart>(one.sigma.size());
    }
    CHECK_THROWS_AS(develop(two, Family::Triangulation), MapError);
  }
}

TEST_CASE("holonomy group orders across the catalogue") {
  const struct {
    const char* name;
    Family family;
    int order;
  } expected[] = {{"fig1a", Family::Triangulation, 1},
                  {"fig1b", Family::Triangulation, 1},
                  {"fig3a", Family::Triangulation, 6},
                  {"fig3b", Family::Triangulation, 6},
                  {"fig3c", Family::Triangulation, 3},
                  {"fig3d", Family::Triangulation, 6},
                  {"fig4a", Family::Quadrangulation, 4},
                  {"fig5a", Family::Hexangulation, 6},
                  {"fig5b", Family::Hexangulation, 6},
                  {"fig5c", Family::Hexangulation, 3}};
  for (const auto& c : expected) {
    CAPTURE(c.name);
    const Development dev = develop(catalogue(c.name), c.family);
    const HolonomyGroup g = holonomy_group(dev);
    CHECK(g.order() == c.order);
    CHECK(g.lattice_order == family_lattice_order(c.family));
    CHECK(g.order() * g.divisor == g.lattice_order);
    // The overload that develops internally agrees.
    CHECK(holonomy_group(catalogue(c.name), c.family).order() == c.order);
    if (c.order == 1) {
      CHECK(g.generator_loops.empty());
    } else {
      REQUIRE_FALSE(g.generator_loops.empty());
      const int rot = loop_holonomy(dev, g.generator_loops.front()).rot;
      CHECK(std::gcd(rot, g.lattice_order) == g.divisor);
    }
  }
}

TEST_CASE("translation lattice of flat maps, in Hermite form") {
  SUBCASE("one-vertex regular triangulation: the full lattice") {
    const Development dev = develop(catalogue("fig1a"), Family::Triangulation);
    const auto tl = translation_lattice(dev);
    REQUIRE(tl.has_value());
    CHECK(tl->u == LatticePoint{1, 0});
    CHECK(tl->v == LatticePoint{0, 1});
    CHECK(tl->det == 1);
    CHECK(tl->index == 1);
  }
  SUBCASE("two-vertex regular triangulation: index two") {
    const Development dev = develop(catalogue("fig1b"), Family::Triangulation);
    const auto tl = translation_lattice(dev);
    REQUIRE(tl.has_value());
    CHECK(tl->v == LatticePoint{0, 2});
    CHECK(tl->u.a == 1);
    CHECK(tl->det == 2);
    CHECK(tl->index == 2);
  }
  SUBCASE("the lattice determinant of a regular triangulation counts vertices") {
    for (const char* name : {"fig1a", "fig1b", "fig1c-1", "fig1c-2"}) {
      CAPTURE(name);
      const SurfaceMap m = catalogue(name);
      const auto tl = translation_lattice(develop(m, Family::Triangulation));
      REQUIRE(tl.has_value());
      CHECK(tl->det == vertex_orbits(m).count());
    }
  }
  SUBCASE("absent as soon as the rotational holonomy is nontrivial") {
    const Development dev = develop(catalogue("fig3a"), Family::Triangulation);
    CHECK_FALSE(translation_lattice(dev).has_value());
  }
}

TEST_CASE("tiling lattice determinants") {
  CHECK(tiling_lattice_det(Family::Triangulation) == 1);
  CHECK(tiling_lattice_det(Family::Quadrangulation) == 1);
  CHECK(tiling_lattice_det(Family::Hexangulation) == 3);
}

TEST_CASE("a loop around a vertex turns by exactly the cone curvature") {
  for (const auto& nm : orientable_catalogue()) {
    CAPTURE(nm.name);
    const SurfaceMap m = catalogue(nm.name);
    const Development dev = develop(m, nm.family);
    const ConeStructure cs = cone_points(m, nm.family);
    const int n = dev.lattice_order;
    for (int v = 0; v < dev.vertices.count(); ++v) {
      CAPTURE(v);
      const DualLoop star = vertex_star_loop(dev, v);
      CHECK(star.crossings.size() == dev.vertices.members[v].size());
      const LatticeMotion h = loop_holonomy(dev, star);
      CHECK(h.rot == mod_n(cs.curvature_units[v], n));
    }
  }
}

TEST_CASE("loop algebra: composition, inverses, backtracking") {
  const Development dev = develop(catalogue("fig3a"), Family::Triangulation);
  const std::vector<Dart> cotree = dev.cotree_darts();
  REQUIRE(cotree.size() >= 2);  // chi = 0 leaves E - (F - 1) = 3 co-tree edges
  const DualLoop a = cotree_generator_loop(dev, cotree[0]);
  const DualLoop b = cotree_generator_loop(dev, cotree[1]);

  SUBCASE("generator loops reproduce the stored crossing motions") {
    for (Dart d : cotree) {
      const DualLoop g = cotree_generator_loop(dev, d);
      CHECK(loop_holonomy(dev, g) == dev.crossing_motion[d]);
    }
  }
  SUBCASE("holonomy of a concatenation is the composition") {
    const LatticeMotion ha = loop_holonomy(dev, a);
    const LatticeMotion hb = loop_holonomy(dev, b);
    CHECK(loop_holonomy(dev, concat_loops(a, b)) == compose(ha, hb));
  }
  SUBCASE("inverse loops give inverse motions") {
    const DualLoop ai = inverse_loop(a);
    CHECK(loop_holonomy(dev, ai) == inverse(loop_holonomy(dev, a)));
    CHECK(loop_holonomy(dev, concat_loops(a, ai)).is_identity());
  }
  SUBCASE("inserting an immediate backtrack does not change holonomy") {
    const LatticeMotion before = loop_holonomy(dev, a);
    // Insert (d, twin d) where d lies in the face entered so far.
    for (std::size_t pos = 0; pos <= a.crossings.size(); ++pos) {
      const int here = pos == 0 ? dev.face_of(a.crossings.front())
                                : dev.face_of(twin(a.crossings[pos - 1]));
      const Dart d = dev.faces.members[here].front();
      DualLoop padded = a;
      padded.crossings.insert(padded.crossings.begin() + pos, {d, twin(d)});
      CHECK(loop_holonomy(dev, padded) == before);
    }
  }
}

TEST_CASE("loops encircling a face turn by the enclosed corner curvature") {
  const SurfaceMap m = refine(catalogue("fig3a"), Family::Triangulation);
  const Development dev = develop(m, Family::Triangulation);
  const ConeStructure cs = cone_points(m, Family::Triangulation);
  for (int f = 0; f < dev.faces.count(); ++f) {
    CAPTURE(f);
    int enclosed = 0;
    for (Dart d : dev.faces.members[f]) enclosed += cs.curvature_units[dev.vertices.id_of[d]];
    DualLoop loop;
    try {
      loop = face_encircling_loop(dev, f);
    } catch (const MapError&) {
      continue;  // face closure touches itself; no embedded loop exists
    }
    CHECK(loop_holonomy(dev, loop).rot == mod_n(enclosed, 6));
  }
}

TEST_CASE("fundamental pairs") {
  SUBCASE("a cone map has non-commuting fundamental holonomies") {
    const Development dev =
        develop(refine(catalogue("fig3a"), Family::Triangulation), Family::Triangulation);
    const FundamentalPair fp = fundamental_pair_holonomy(dev);
    CHECK(fp.alpha.rot == 5);
    CHECK(fp.alpha.trans == LatticePoint{2, 2});
    CHECK(fp.beta.rot == 1);
    CHECK(fp.beta.trans == LatticePoint{4, -2});
    CHECK(fp.commutator.rot == 0);
    CHECK(fp.commutator.trans == LatticePoint{2, -4});
    CHECK(loop_holonomy(dev, fp.alpha_loop) == fp.alpha);
    CHECK(loop_holonomy(dev, fp.beta_loop) == fp.beta);
    const LatticeMotion recomposed =
        compose(compose(fp.alpha, fp.beta), compose(inverse(fp.alpha), inverse(fp.beta)));
    CHECK(recomposed == fp.commutator);
  }
  SUBCASE("flat maps have commuting fundamental holonomies") {
    for (const char* name : {"fig1a", "fig1b", "fig1c-1"}) {
      CAPTURE(name);
      const Development dev = develop(catalogue(name), Family::Triangulation);
      const FundamentalPair fp = fundamental_pair_holonomy(dev);
      CHECK(fp.commutator.is_identity());
      CHECK(fp.alpha.rot == 0);
      CHECK(fp.beta.rot == 0);
    }
  }
}

TEST_CASE("developing turn sequences") {
  SUBCASE("a straight step is a unit translation") {
    const LatticeMotion m = develop_walk({0}, Family::Triangulation);
    CHECK(m.rot == 0);
    CHECK(m.trans == LatticePoint{1, 0});
  }
  SUBCASE("walking around a hexagon or a square closes up") {
    CHECK(develop_walk({1, 1, 1, 1, 1, 1}, Family::Triangulation).is_identity());
    CHECK(develop_walk({1, 1, 1, 1}, Family::Quadrangulation).is_identity());
  }
  SUBCASE("the nine-step staircase returns translated one unit right") {
    const LatticeMotion m =
        develop_walk({0, 1, 1, 0, 1, 1, 1, 0, 1}, Family::Triangulation);
    CHECK(m.rot == 0);
    CHECK(m.trans == LatticePoint{1, 0});
  }
  SUBCASE("concatenating sequences composes the motions") {
    const std::vector<int> t1 = {0, 1, 2, 0};
    const std::vector<int> t2 = {5, 1, 0, 3, 1};
    std::vector<int> joined = t1;
    joined.insert(joined.end(), t2.begin(), t2.end());
    const LatticeMotion whole = develop_walk(joined, Family::Triangulation);
    CHECK(whole == compose(develop_walk(t1, Family::Triangulation),
                           develop_walk(t2, Family::Triangulation)));
  }
}

TEST_CASE("bicolorability matches the holonomy bound, both computed independently") {
  const struct {
    const char* name;
    Family family;
    const char* kind;
    const char* colorable;
    const char* order;
    const char* bound;
    const char* in_bound;
  } expected[] = {
      {"fig1a", Family::Triangulation, "face2", "true", "1", "C3", "true"},
      {"fig3a", Family::Triangulation, "face2", "false", "6", "C3", "false"},
      {"fig4a", Family::Quadrangulation, "edge-alternating", "false", "4", "C2", "false"},
      {"fig5a", Family::Hexangulation, "vertex2", "false", "6", "C3", "false"},
      {"fig5c", Family::Hexangulation, "vertex2", "true", "3", "C3", "true"},
  };
  for (const auto& c : expected) {
    CAPTURE(c.name);
    const Report r = lemma2_crosscheck(catalogue(c.name), c.family);
    REQUIRE(r.find("coloring_kind") != nullptr);
    CHECK(*r.find("coloring_kind") == c.kind);
    CHECK(*r.find("colorable") == c.colorable);
    CHECK(*r.find("holonomy_order") == c.order);
    CHECK(*r.find("holonomy_bound") == c.bound);
    CHECK(*r.find("holonomy_in_bound") == c.in_bound);
    CHECK(*r.find("agree") == "true");
  }
}
