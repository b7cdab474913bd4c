#include "torusmaps/cone_metric.hpp"

#include <stdexcept>

namespace torusmaps {

const char* family_name(Family f) {
  switch (f) {
    case Family::Triangulation: return "triangulation";
    case Family::Quadrangulation: return "quadrangulation";
    case Family::Hexangulation: return "hexangulation";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& text) {
  if (text == "triangulation" || text == "tri" || text == "3")
    return Family::Triangulation;
  if (text == "quadrangulation" || text == "quad" || text == "4")
    return Family::Quadrangulation;
  if (text == "hexangulation" || text == "hex" || text == "6")
    return Family::Hexangulation;
  return std::nullopt;
}

int family_face_size(Family f) {
  switch (f) {
    case Family::Triangulation: return 3;
    case Family::Quadrangulation: return 4;
    case Family::Hexangulation: return 6;
  }
  return 0;
}

int family_regular_degree(Family f) {
  // kbar = 2n/(n-2) for n-gon faces: the degree at which curvature vanishes.
  switch (f) {
    case Family::Triangulation: return 6;
    case Family::Quadrangulation: return 4;
    case Family::Hexangulation: return 3;
  }
  return 0;
}

Ring family_ring(Family f) {
  return f == Family::Quadrangulation ? Ring::Gaussian : Ring::Eisenstein;
}

int family_lattice_order(Family f) { return rotation_order(family_ring(f)); }

int curvature_units_for_degree(Family f, int degree) {
  // N * (1 - k/kbar) with N and kbar as above; integral for every family.
  switch (f) {
    case Family::Triangulation: return 6 - degree;
    case Family::Quadrangulation: return 4 - degree;
    case Family::Hexangulation: return 6 - 2 * degree;
  }
  return 0;
}

DegreeProfile degree_profiles(const SurfaceMap& m) {
  DegreeProfile dp;
  for (const auto& orbit : vertex_orbits(m).members)
    ++dp.vertex_degrees[static_cast<int>(orbit.size())];
  for (int len : face_length_list(m)) ++dp.face_lengths[len];
  dp.chi = classify_surface(m).chi;
  return dp;
}

Report check_counting_relations(const DegreeProfile& dp, std::optional<Family> family) {
  Report rep;
  rep.title = "counting relations";
  bool all_pass = true;

  if (family) {
    const int n = family_face_size(*family);
    bool pure = true;
    for (const auto& [len, count] : dp.face_lengths)
      if (len != n && count > 0) pure = false;
    if (pure) {
      const int kbar = family_regular_degree(*family);
      long long lhs = 0;
      for (const auto& [k, count] : dp.vertex_degrees)
        lhs += static_cast<long long>(kbar - k) * count;
      const long long residual = lhs - static_cast<long long>(kbar) * dp.chi;
      rep.add("eq1_residual", residual);
      rep.add("eq1_pass", residual == 0);
      all_pass = all_pass && residual == 0;
    } else {
      rep.add("eq1_pass", "skipped (faces are not all n-gons of the family)");
    }
  } else {
    rep.add("eq1_pass", "skipped (no family given)");
  }

  long long eq2 = 0;
  for (const auto& [k, count] : dp.face_lengths)
    eq2 += static_cast<long long>(4 - k) * count;
  for (const auto& [k, count] : dp.vertex_degrees)
    eq2 += static_cast<long long>(4 - k) * count;
  const long long eq2_residual = eq2 - 4LL * dp.chi;
  rep.add("eq2_residual", eq2_residual);
  rep.add("eq2_pass", eq2_residual == 0);
  all_pass = all_pass && eq2_residual == 0;

  long long odd_faces = 0, odd_vertices = 0;
  for (const auto& [k, count] : dp.face_lengths)
    if (k != 4) odd_faces += static_cast<long long>(k) * count;
  for (const auto& [k, count] : dp.vertex_degrees)
    if (k != 4) odd_vertices += static_cast<long long>(k) * count;
  rep.add("eq3_face_sum", odd_faces);
  rep.add("eq3_vertex_sum", odd_vertices);
  const bool eq3_pass = odd_faces % 2 == 0 && odd_vertices % 2 == 0;
  rep.add("eq3_pass", eq3_pass);
  all_pass = all_pass && eq3_pass;

  rep.add("all_pass", all_pass);
  return rep;
}

ConeStructure cone_points(const SurfaceMap& m, Family f) {
  const int n = family_face_size(f);
  for (int len : face_length_list(m))
    if (len != n)
      throw MapError("face of length " + std::to_string(len) + " in a " +
                     family_name(f) + " (expected all faces of length " +
                     std::to_string(n) + ")");

  ConeStructure cs;
  cs.family = f;
  cs.lattice_order = family_lattice_order(f);
  const Orbits vertices = vertex_orbits(m);
  long long total = 0;
  for (int v = 0; v < vertices.count(); ++v) {
    const int units =
        curvature_units_for_degree(f, static_cast<int>(vertices.members[v].size()));
    cs.curvature_units.push_back(units);
    if (units != 0) cs.cone_vertices.push_back(v);
    total += units;
  }
  const int chi = classify_surface(m).chi;
  if (total != static_cast<long long>(cs.lattice_order) * chi)
    throw std::logic_error("curvature does not sum to N * chi");

  if (cs.cone_vertices.size() == 2) {
    const int u0 = cs.curvature_units[cs.cone_vertices[0]];
    const int u1 = cs.curvature_units[cs.cone_vertices[1]];
    const int mag = u0 > 0 ? u0 : -u0;
    if (u0 == -u1 && mag > 0 && cs.lattice_order % mag == 0 &&
        cs.lattice_order / mag >= 2)
      cs.n_prime = cs.lattice_order / mag;
  }
  return cs;
}

}  // namespace torusmaps
