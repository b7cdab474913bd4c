#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "torusmaps/canonical.hpp"
#include "torusmaps/cone_metric.hpp"
#include "torusmaps/enumeration.hpp"
#include "torusmaps/surface_map.hpp"

using namespace torusmaps;

namespace {

EnumSpec spec_of(Family family, int max_vertices,
                 std::optional<std::vector<int>> degrees = std::nullopt) {
  EnumSpec s;
  s.family = family;
  s.max_vertices = max_vertices;
  s.exceptional_degrees = std::move(degrees);
  return s;
}

long long count_classes(const EnumSpec& spec) {
  long long n = 0;
  const EnumOutcome out = enumerate_maps(spec, [&](const SurfaceMap&) { ++n; });
  CHECK(out.complete);
  CHECK(out.classes == n);
  return n;
}

std::set<CanonicalForm> canonical_set(const std::vector<SurfaceMap>& maps) {
  std::set<CanonicalForm> forms;
  for (const auto& m : maps) forms.insert(canonical_form(m));
  return forms;
}

}  // namespace

TEST_CASE("counts of regular torus maps by vertex bound") {
  SUBCASE("triangulations") {
    const long long expected[] = {1, 1, 2, 3, 2, 3, 3};
    for (int v = 1; v <= 7; ++v) {
      CAPTURE(v);
      CHECK(count_classes(spec_of(Family::Triangulation, v, std::vector<int>{})) ==
            expected[v - 1]);
    }
  }
  SUBCASE("quadrangulations") {
    const long long expected[] = {1, 2, 2, 4, 3, 5, 3};
    for (int v = 1; v <= 7; ++v) {
      CAPTURE(v);
      CHECK(count_classes(spec_of(Family::Quadrangulation, v, std::vector<int>{})) ==
            expected[v - 1]);
    }
  }
  SUBCASE("hexangulations have even vertex counts") {
    const long long expected[] = {1, 1, 2};
    for (int i = 0; i < 3; ++i) {
      CAPTURE(i);
      CHECK(count_classes(spec_of(Family::Hexangulation, 2 * i + 2, std::vector<int>{})) ==
            expected[i]);
    }
  }
}

TEST_CASE("counts with one pair of exceptional degrees") {
  const long long expected[] = {0, 1, 2, 3};
  for (int v = 1; v <= 4; ++v) {
    CAPTURE(v);
    CHECK(count_classes(spec_of(Family::Triangulation, v, std::vector<int>{4, 8})) ==
          expected[v - 1]);
  }
}

TEST_CASE("every visited map satisfies the requested constraints") {
  const EnumSpec spec = spec_of(Family::Triangulation, 3, std::vector<int>{4, 8});
  std::vector<SurfaceMap> seen;
  enumerate_maps(spec, [&](const SurfaceMap& m) { seen.push_back(m); });
  REQUIRE(seen.size() == 2);
  std::set<CanonicalForm> forms;
  for (const auto& m : seen) {
    const SurfaceStats s = classify_surface(m);
    CHECK(s.chi == 0);
    CHECK(s.orientable);
    CHECK(s.vertices <= 3);
    for (int len : face_length_list(m)) CHECK(len == 3);
    std::multiset<int> exceptional;
    for (const auto& orbit : vertex_orbits(m).members)
      if (orbit.size() != 6) exceptional.insert(static_cast<int>(orbit.size()));
    CHECK(exceptional == std::multiset<int>{4, 8});
    CHECK(is_connected(m));
    forms.insert(canonical_form(m));
  }
  CHECK(forms.size() == seen.size());  // pairwise non-isomorphic
}

TEST_CASE("the backtracking enumerator agrees with brute force on tiny sizes") {
  const EnumSpec cases[] = {
      spec_of(Family::Triangulation, 2),
      spec_of(Family::Quadrangulation, 2),
      spec_of(Family::Hexangulation, 3),
      spec_of(Family::Triangulation, 2, std::vector<int>{4, 8}),
  };
  for (const auto& spec : cases) {
    CAPTURE(family_name(spec.family));
    CAPTURE(spec.max_vertices);
    std::vector<SurfaceMap> fast;
    enumerate_maps(spec, [&](const SurfaceMap& m) { fast.push_back(m); });
    const std::vector<SurfaceMap> slow = enumerate_maps_bruteforce(spec);
    CHECK(fast.size() == slow.size());
    CHECK(canonical_set(fast) == canonical_set(slow));
  }
}

TEST_CASE("budgets truncate the search and say so") {
  EnumSpec spec = spec_of(Family::Triangulation, 9, std::vector<int>{4, 8});
  spec.node_budget = 500;
  long long visited = 0;
  const EnumOutcome out = enumerate_maps(spec, [&](const SurfaceMap&) { ++visited; });
  CHECK_FALSE(out.complete);
  CHECK(out.nodes == 501);
  CHECK(out.classes == 5);
  CHECK(visited == out.classes);
}

TEST_CASE("multi-threaded runs visit the same class set") {
  EnumSpec spec = spec_of(Family::Triangulation, 9, std::vector<int>{4, 8});
  std::set<CanonicalForm> single, parallel;
  {
    const EnumOutcome out =
        enumerate_maps(spec, [&](const SurfaceMap& m) { single.insert(canonical_form(m)); });
    CHECK(out.complete);
    CHECK(out.classes == 14);
    CHECK(out.nodes == 4304);
  }
  {
    spec.threads = 4;
    std::mutex mu;
    const EnumOutcome out = enumerate_maps(spec, [&](const SurfaceMap& m) {
      const CanonicalForm f = canonical_form(m);
      std::lock_guard<std::mutex> lock(mu);
      parallel.insert(f);
    });
    CHECK(out.complete);
    CHECK(out.classes == 14);
    CHECK(out.nodes == 4304);
  }
  CHECK(single.size() == 14);
  CHECK(single == parallel);
}

TEST_CASE("single-threaded visit order is deterministic") {
  const EnumSpec spec = spec_of(Family::Triangulation, 4, std::vector<int>{4, 8});
  std::vector<std::string> first, second;
  enumerate_maps(spec, [&](const SurfaceMap& m) { first.push_back(serialize_map(m)); });
  enumerate_maps(spec, [&](const SurfaceMap& m) { second.push_back(serialize_map(m)); });
  CHECK(first == second);
  CHECK(first.size() == 3);
}

TEST_CASE("signed enumeration is not supported") {
  EnumSpec spec = spec_of(Family::Triangulation, 2);
  spec.orientable_only = false;
  CHECK_THROWS_AS(enumerate_maps(spec, [](const SurfaceMap&) {}), MapError);
}

TEST_CASE("theorem slices run end to end") {
  SUBCASE("no 5,7 triangulation up to six vertices") {
    VerifyOptions opt;
    opt.max_vertices = 6;
    const VerifyOutcome out = verify_theorem(TheoremId::T1, opt);
    CHECK(out.passed);
    CHECK(out.complete);
    const std::string* instances = out.report.find("instances");
    REQUIRE(instances != nullptr);
    CHECK(*instances == "0");
  }
  SUBCASE("4,8 triangulations exist but are never face-2-colorable") {
    VerifyOptions opt;
    opt.max_vertices = 4;
    const VerifyOutcome out = verify_theorem(TheoremId::T4, opt);
    CHECK(out.passed);
    CHECK(out.complete);
    REQUIRE(out.report.find("instances") != nullptr);
    CHECK(std::stoll(*out.report.find("instances")) >= 1);
    REQUIRE(out.report.find("violations") != nullptr);
    CHECK(*out.report.find("violations") == "0");
  }
  SUBCASE("theorem names round-trip") {
    for (TheoremId id : {TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T4,
                         TheoremId::T5, TheoremId::HOL, TheoremId::L2, TheoremId::T6}) {
      const auto parsed = parse_theorem_id(theorem_id_name(id));
      REQUIRE(parsed.has_value());
      CHECK(*parsed == id);
    }
    CHECK_FALSE(parse_theorem_id("T9").has_value());
  }
}
