#include <random>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "torusmaps/lattice.hpp"

using namespace torusmaps;

namespace {

LatticeMotion random_motion(Ring r, std::mt19937& rng) {
  std::uniform_int_distribution<int> rot(0, rotation_order(r) - 1);
  std::uniform_int_distribution<std::int64_t> coord(-9, 9);
  return make_motion(r, rot(rng), {coord(rng), coord(rng)});
}

LatticePoint random_point(std::mt19937& rng) {
  std::uniform_int_distribution<std::int64_t> coord(-9, 9);
  return {coord(rng), coord(rng)};
}

}  // namespace

TEST_CASE("rotation orders") {
  CHECK(rotation_order(Ring::Eisenstein) == 6);
  CHECK(rotation_order(Ring::Gaussian) == 4);
  for (Ring r : {Ring::Eisenstein, Ring::Gaussian}) {
    LatticePoint p{1, 0};
    std::set<std::pair<std::int64_t, std::int64_t>> orbit;
    for (int k = 0; k < rotation_order(r); ++k) {
      orbit.insert({p.a, p.b});
      p = rotate_once(r, p);
    }
    CHECK(static_cast<int>(orbit.size()) == rotation_order(r));
    CHECK(p == LatticePoint{1, 0});  // full turn
  }
}

TEST_CASE("rotation powers and units") {
  std::mt19937 rng(7);
  for (Ring r : {Ring::Eisenstein, Ring::Gaussian}) {
    const int n = rotation_order(r);
    for (int trial = 0; trial < 50; ++trial) {
      const LatticePoint p = random_point(rng);
      CHECK(rotate(r, 0, p) == p);
      CHECK(rotate(r, n, p) == p);
      CHECK(rotate(r, -1, rotate(r, 1, p)) == p);
      CHECK(rotate(r, 5, p) == rotate(r, 5 - n, p));
    }
    const auto units = ring_units(r);
    for (int k = 0; k < n; ++k) {
      CHECK(units[k] == rotate(r, k, LatticePoint{1, 0}));
      CHECK(unit_index(r, units[k]) == k);
    }
    CHECK(unit_index(r, {2, 0}) == -1);
    CHECK(unit_index(r, {0, 0}) == -1);
  }
  // The sixth roots of unity in Eisenstein coordinates.
  CHECK(rotate_once(Ring::Eisenstein, LatticePoint{1, 0}) == LatticePoint{0, 1});
  CHECK(rotate_once(Ring::Eisenstein, LatticePoint{0, 1}) == LatticePoint{-1, 1});
  // i * (a + bi) = -b + ai.
  CHECK(rotate_once(Ring::Gaussian, LatticePoint{3, 2}) == LatticePoint{-2, 3});
}

TEST_CASE("motions form a group under compose") {
  std::mt19937 rng(11);
  for (Ring r : {Ring::Eisenstein, Ring::Gaussian}) {
    const LatticeMotion id = motion_identity(r);
    CHECK(id.is_identity());
    for (int trial = 0; trial < 80; ++trial) {
      const LatticeMotion m1 = random_motion(r, rng);
      const LatticeMotion m2 = random_motion(r, rng);
      const LatticeMotion m3 = random_motion(r, rng);
      const LatticePoint p = random_point(rng);
      // compose applies its second argument first.
      CHECK(apply(compose(m1, m2), p) == apply(m1, apply(m2, p)));
      CHECK(compose(m1, id) == m1);
      CHECK(compose(id, m1) == m1);
      CHECK(compose(m1, inverse(m1)).is_identity());
      CHECK(compose(inverse(m1), m1).is_identity());
      CHECK(compose(compose(m1, m2), m3) == compose(m1, compose(m2, m3)));
    }
  }
}

TEST_CASE("determinant of coordinate pairs") {
  CHECK(det2({1, 0}, {0, 1}) == 1);
  CHECK(det2({2, 1}, {1, 2}) == 3);
  CHECK(det2({2, 4}, {1, 2}) == 0);
  CHECK(det2({0, 1}, {1, 0}) == -1);
}

TEST_CASE("canonical Burgers representative") {
  for (Ring r : {Ring::Eisenstein, Ring::Gaussian}) {
    // Invariant under rotating the input by any unit.
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
      const LatticePoint t = random_point(rng);
      const LatticePoint c = burgers_canonical(r, t);
      for (int k = 0; k < rotation_order(r); ++k)
        CHECK(burgers_canonical(r, rotate(r, k, t)) == c);
      // The representative is itself in the rotation orbit.
      bool in_orbit = false;
      for (int k = 0; k < rotation_order(r); ++k)
        in_orbit = in_orbit || rotate(r, k, t) == c;
      CHECK(in_orbit);
    }
    CHECK(burgers_canonical(r, {0, 0}) == LatticePoint{0, 0});
  }
  // Lexicographically least pair of the orbit.
  CHECK(burgers_canonical(Ring::Eisenstein, {0, -1}) == LatticePoint{-1, 0});
  CHECK(burgers_canonical(Ring::Gaussian, {1, 0}) == LatticePoint{-1, 0});
}

TEST_CASE("hermite basis of a generated sublattice") {
  SUBCASE("diagonal generators") {
    const auto h = lattice_span({{2, 0}, {0, 3}});
    REQUIRE(h.has_value());
    CHECK(h->det == 6);
    CHECK(h->u == LatticePoint{2, 0});
    CHECK(h->v == LatticePoint{0, 3});
  }
  SUBCASE("redundant generators reduce") {
    const auto h = lattice_span({{1, 0}, {0, 1}, {5, -7}});
    REQUIRE(h.has_value());
    CHECK(h->det == 1);
  }
  SUBCASE("normalization keeps 0 <= e < d2") {
    const auto h = lattice_span({{2, 5}, {0, 3}});
    REQUIRE(h.has_value());
    CHECK(h->u.a > 0);
    CHECK(h->v.a == 0);
    CHECK(h->v.b > 0);
    CHECK(h->u.b >= 0);
    CHECK(h->u.b < h->v.b);
    CHECK(h->det == h->u.a * h->v.b);
  }
  SUBCASE("rank deficiency yields nothing") {
    CHECK_FALSE(lattice_span({{2, 4}, {1, 2}}).has_value());
    CHECK_FALSE(lattice_span({{0, 0}}).has_value());
    CHECK_FALSE(lattice_span({}).has_value());
  }
  SUBCASE("the basis generates the same lattice") {
    // Every generator must be an integer combination of u and v.
    const std::vector<LatticePoint> gens{{4, 6}, {2, 8}, {-6, 2}};
    const auto h = lattice_span(gens);
    REQUIRE(h.has_value());
    for (const LatticePoint& g : gens) {
      const std::int64_t det = h->u.a * h->v.b - h->u.b * h->v.a;
      const std::int64_t x = g.a * h->v.b - g.b * h->v.a;
      const std::int64_t y = h->u.a * g.b - h->u.b * g.a;
      CHECK(x % det == 0);
      CHECK(y % det == 0);
    }
  }
}

TEST_CASE("printable forms") {
  CHECK(to_string(LatticePoint{3, -2}) == "(3,-2)");
  CHECK(to_string(make_motion(Ring::Eisenstein, 2, {1, 0})) ==
        "rot=2/6 trans=(1,0)");
  CHECK(to_string(make_motion(Ring::Gaussian, 3, {0, -5})) ==
        "rot=3/4 trans=(0,-5)");
}
