#include <string>
#include <vector>

#include "doctest.h"
#include "torusmaps/surface_map.hpp"

using namespace torusmaps;

namespace {

SurfaceMap make_map(std::string name, int edges, std::vector<int> sigma) {
  SurfaceMap m;
  m.name = std::move(name);
  m.edge_count = edges;
  m.sigma = std::move(sigma);
  return m;
}

// One vertex, two edges, sigma the 4-cycle (0 2 1 3): the square torus.
SurfaceMap square_torus() { return make_map("sq", 2, {2, 3, 1, 0}); }

}  // namespace

TEST_CASE("twin pairs darts within each edge") {
  CHECK(twin(0) == 1);
  CHECK(twin(1) == 0);
  CHECK(twin(7) == 6);
  for (Dart d = 0; d < 20; ++d) CHECK(twin(twin(d)) == d);
}

TEST_CASE("orbit partition walks sigma cycles in order") {
  const SurfaceMap m = square_torus();
  const Orbits vo = vertex_orbits(m);
  REQUIRE(vo.count() == 1);
  CHECK(vo.members[0] == std::vector<Dart>{0, 2, 1, 3});
  for (Dart d = 0; d < 4; ++d) CHECK(vo.id_of[d] == 0);

  const Orbits fo = face_orbits(m);
  REQUIRE(fo.count() == 1);
  CHECK(fo.members[0].size() == 4);
  CHECK(face_length_list(m) == std::vector<int>{4});
}

TEST_CASE("classification of tiny maps") {
  SUBCASE("a loop drawn on the sphere") {
    const SurfaceStats s = classify_surface(make_map("loop", 1, {1, 0}));
    CHECK(s.vertices == 1);
    CHECK(s.edges == 1);
    CHECK(s.faces == 2);
    CHECK(s.chi == 2);
    CHECK(s.orientable);
    CHECK(s.genus == 0);
  }
  SUBCASE("a single edge between two vertices") {
    const SurfaceStats s = classify_surface(make_map("edge", 1, {0, 1}));
    CHECK(s.vertices == 2);
    CHECK(s.faces == 1);
    CHECK(s.chi == 2);
    CHECK(s.orientable);
  }
  SUBCASE("a sign-reversing loop gives the projective plane") {
    SurfaceMap m = make_map("rp2", 1, {1, 0});
    m.signs = std::vector<std::int8_t>{-1};
    const SurfaceStats s = classify_surface(m);
    CHECK(s.vertices == 1);
    CHECK(s.faces == 1);
    CHECK(s.chi == 1);
    CHECK_FALSE(s.orientable);
    CHECK(s.genus == 1);
  }
  SUBCASE("the square torus") {
    const SurfaceStats s = classify_surface(square_torus());
    CHECK(s.vertices == 1);
    CHECK(s.edges == 2);
    CHECK(s.faces == 1);
    CHECK(s.chi == 0);
    CHECK(s.orientable);
    CHECK(s.genus == 1);
  }
}

TEST_CASE("validation rejects broken encodings") {
  SUBCASE("sigma must be a permutation") {
    CHECK_THROWS_AS(validate_map(make_map("bad", 2, {0, 0, 1, 2})), MapError);
  }
  SUBCASE("sigma must have one entry per dart") {
    CHECK_THROWS_AS(validate_map(make_map("bad", 2, {1, 0})), MapError);
  }
  SUBCASE("sigma entries must be in range") {
    CHECK_THROWS_AS(validate_map(make_map("bad", 1, {2, 0})), MapError);
  }
  SUBCASE("signs must cover every edge") {
    SurfaceMap m = square_torus();
    m.signs = std::vector<std::int8_t>{1};
    CHECK_THROWS_AS(validate_map(m), MapError);
  }
  SUBCASE("signs must be +1 or -1") {
    SurfaceMap m = square_torus();
    m.signs = std::vector<std::int8_t>{1, 0};
    CHECK_THROWS_AS(validate_map(m), MapError);
  }
  SUBCASE("a valid map passes") { CHECK_NOTHROW(validate_map(square_torus())); }
}

TEST_CASE("map text round-trips") {
  const SurfaceMap m = square_torus();
  const std::string text = serialize_map(m);
  const SurfaceMap back = parse_map(text);
  CHECK(back.name == m.name);
  CHECK(back.edge_count == m.edge_count);
  CHECK(back.sigma == m.sigma);
  CHECK_FALSE(back.signs.has_value());
  CHECK(serialize_map(back) == text);

  SUBCASE("signed maps keep their signs") {
    SurfaceMap s = m;
    s.signs = std::vector<std::int8_t>{1, -1};
    const SurfaceMap back2 = parse_map(serialize_map(s));
    REQUIRE(back2.signs.has_value());
    CHECK((*back2.signs)[0] == 1);
    CHECK((*back2.signs)[1] == -1);
  }
  SUBCASE("comments and blank lines are ignored") {
    const SurfaceMap c = parse_map(
        "# a comment\nmap sq\n\nedges 2\n# another\nsigma 2 3 1 0\n");
    CHECK(c.sigma == m.sigma);
  }
  SUBCASE("malformed text throws") {
    CHECK_THROWS_AS(parse_map("edges 2\nsigma 2 3 1 0\n"), MapError);
    CHECK_THROWS_AS(parse_map("map x\nedges 2\nsigma 2 3 1\n"), MapError);
    CHECK_THROWS_AS(parse_map("map x\nedges 1\nsigma 1 0\nsigns ?\n"), MapError);
    CHECK_THROWS_AS(parse_map(""), MapError);
  }
}

TEST_CASE("connectivity detection") {
  CHECK(is_connected(square_torus()));
  // Two disjoint loops.
  CHECK_FALSE(is_connected(make_map("two-loops", 2, {1, 0, 3, 2})));
}

TEST_CASE("dual exchanges vertices and faces and is an involution") {
  const SurfaceMap m = square_torus();
  const SurfaceMap d = dual_map(m);
  const SurfaceStats sm = classify_surface(m);
  const SurfaceStats sd = classify_surface(d);
  CHECK(sd.vertices == sm.faces);
  CHECK(sd.faces == sm.vertices);
  CHECK(sd.chi == sm.chi);
  CHECK(sd.orientable == sm.orientable);
  CHECK(dual_map(d).sigma == m.sigma);

  SurfaceMap signedm = m;
  signedm.signs = std::vector<std::int8_t>{1, -1};
  CHECK_THROWS_AS(dual_map(signedm), MapError);
}

TEST_CASE("positively oriented encoding of an orientable signed map") {
  // Reverse the rotation at one endpoint of a single edge and mark the edge
  // negative: same surface, different chart.
  SurfaceMap m = make_map("edge", 1, {0, 1});
  m.signs = std::vector<std::int8_t>{-1};
  CHECK(classify_surface(m).orientable);
  const SurfaceMap plus = orient_positively(m);
  CHECK_FALSE(plus.has_negative_sign());
  CHECK(classify_surface(plus).chi == 2);

  SurfaceMap rp2 = make_map("rp2", 1, {1, 0});
  rp2.signs = std::vector<std::int8_t>{-1};
  CHECK_THROWS_AS(orient_positively(rp2), MapError);
}
