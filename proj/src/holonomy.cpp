#include "torusmaps/holonomy.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "torusmaps/coloring.hpp"

namespace torusmaps {

namespace {

// Canonical unit n-gon, positively oriented: vertex position and direction
// unit (as a power of the primitive root) for each boundary slot.
struct SlotTable {
  std::vector<LatticePoint> start;
  std::vector<int> dir;
};

SlotTable slots_for(Family f) {
  switch (f) {
    case Family::Triangulation:
      return {{{0, 0}, {1, 0}, {0, 1}}, {0, 2, 4}};
    case Family::Quadrangulation:
      return {{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {0, 1, 2, 3}};
    case Family::Hexangulation:
      return {{{0, 0}, {1, 0}, {1, 1}, {0, 2}, {-1, 2}, {-1, 1}}, {0, 1, 2, 3, 4, 5}};
  }
  return {};
}

int mod_n(int x, int n) {
  x %= n;
  return x < 0 ? x + n : x;
}

}  // namespace

DualLoop inverse_loop(const DualLoop& loop) {
  DualLoop inv;
  inv.crossings.reserve(loop.crossings.size());
  for (auto it = loop.crossings.rbegin(); it != loop.crossings.rend(); ++it)
    inv.crossings.push_back(twin(*it));
  return inv;
}

DualLoop concat_loops(const DualLoop& first, const DualLoop& second) {
  DualLoop out = first;
  out.crossings.insert(out.crossings.end(), second.crossings.begin(),
                       second.crossings.end());
  return out;
}

LatticePoint Development::dart_vector(Dart d) const {
  return ring_units(ring)[dart_direction[d]];
}

std::vector<Dart> Development::cotree_darts() const {
  std::vector<Dart> out;
  for (int e = 0; e < map.edge_count; ++e)
    if (!edge_in_tree[e]) out.push_back(2 * e);
  return out;
}

Development develop(const SurfaceMap& input, Family family) {
  validate_map(input);
  if (!is_connected(input)) throw MapError("development requires a connected map");

  Development dev;
  dev.map = orient_positively(input);  // throws when non-orientable
  dev.family = family;
  dev.ring = family_ring(family);
  dev.lattice_order = family_lattice_order(family);
  const int N = dev.lattice_order;

  const SurfaceStats stats = classify_surface(dev.map);
  if (stats.chi != 0)
    throw MapError("development requires a torus (chi = 0); map has chi = " +
                   std::to_string(stats.chi));
  const int n = family_face_size(family);
  dev.vertices = vertex_orbits(dev.map);
  dev.faces = face_orbits(dev.map);
  for (const auto& face : dev.faces.members)
    if (static_cast<int>(face.size()) != n)
      throw MapError("face of length " + std::to_string(face.size()) + " in a " +
                     family_name(family));

  const SlotTable slots = slots_for(family);
  const int dart_count = dev.map.dart_count();
  std::vector<int> slot_of(dart_count);
  for (const auto& face : dev.faces.members)
    for (int j = 0; j < n; ++j) slot_of[face[j]] = j;

  // Gluing motion across dart d: carries the local coordinates of the face of
  // twin(d) into those of the face of d, identifying the two sides of the
  // shared edge (same segment, opposite directions).
  auto gluing = [&](Dart d) {
    const int j = slot_of[d], k = slot_of[twin(d)];
    const int b = slots.dir[j], a = slots.dir[k];
    const int r = mod_n(b - a + N / 2, N);
    const LatticePoint t =
        slots.start[j] + ring_units(dev.ring)[b] - rotate(dev.ring, r, slots.start[k]);
    return make_motion(dev.ring, r, t);
  };

  const int face_count = dev.faces.count();
  dev.face_frame.assign(face_count, motion_identity(dev.ring));
  dev.parent_crossing.assign(face_count, -1);
  dev.edge_in_tree.assign(dev.map.edge_count, 0);
  std::vector<char> placed(face_count, 0);
  placed[dev.root_face] = 1;
  std::deque<int> queue{dev.root_face};
  int placed_count = 1;
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    std::vector<Dart> scan = dev.faces.members[f];
    std::sort(scan.begin(), scan.end());
    for (Dart d : scan) {
      const int g = dev.face_of(twin(d));
      if (placed[g]) continue;
      placed[g] = 1;
      ++placed_count;
      dev.face_frame[g] = compose(dev.face_frame[f], gluing(d));
      dev.parent_crossing[g] = d;
      dev.edge_in_tree[d >> 1] = 1;
      queue.push_back(g);
    }
  }
  if (placed_count != face_count)
    throw std::logic_error("dual graph of a connected map must be connected");

  dev.dart_corner.resize(dart_count);
  dev.dart_direction.resize(dart_count);
  dev.crossing_motion.resize(dart_count);
  for (Dart d = 0; d < dart_count; ++d) {
    const int f = dev.face_of(d);
    dev.dart_corner[d] = apply(dev.face_frame[f], slots.start[slot_of[d]]);
    dev.dart_direction[d] = mod_n(dev.face_frame[f].rot + slots.dir[slot_of[d]], N);
  }
  for (Dart d = 0; d < dart_count; ++d) {
    const int f = dev.face_of(d), g = dev.face_of(twin(d));
    dev.crossing_motion[d] =
        compose(dev.face_frame[f], compose(gluing(d), inverse(dev.face_frame[g])));
    if (dev.edge_in_tree[d >> 1]) {
      if (!dev.crossing_motion[d].is_identity() ||
          dev.dart_corner[twin(d)] != dev.dart_corner[d] + dev.dart_vector(d) ||
          dev.dart_direction[twin(d)] != mod_n(dev.dart_direction[d] + N / 2, N))
        throw std::logic_error("tree-glued faces disagree on their shared edge");
    }
  }
  return dev;
}

LatticeMotion loop_holonomy(const Development& dev, const DualLoop& loop) {
  const int k = static_cast<int>(loop.crossings.size());
  LatticeMotion h = motion_identity(dev.ring);
  for (int i = 0; i < k; ++i) {
    const Dart c = loop.crossings[i];
    if (c < 0 || c >= dev.map.dart_count())
      throw MapError("loop crossing " + std::to_string(c) + " is not a dart");
    const Dart next = loop.crossings[(i + 1) % k];
    if (dev.face_of(twin(c)) != dev.face_of(next))
      throw MapError("loop crossings " + std::to_string(c) + " and " +
                     std::to_string(next) + " do not meet in a common face");
    h = compose(h, dev.crossing_motion[c]);
  }
  return h;
}

DualLoop cotree_generator_loop(const Development& dev, Dart crossing) {
  if (dev.edge_in_tree[crossing >> 1])
    throw MapError("dart " + std::to_string(crossing) + " crosses a tree edge");
  auto path_from_root = [&](int face) {
    std::vector<Dart> path;
    for (int f = face; dev.parent_crossing[f] >= 0;) {
      const Dart p = dev.parent_crossing[f];
      path.push_back(p);
      f = dev.face_of(p);
    }
    std::reverse(path.begin(), path.end());
    return path;
  };
  DualLoop loop;
  loop.crossings = path_from_root(dev.face_of(crossing));
  loop.crossings.push_back(crossing);
  const std::vector<Dart> back = path_from_root(dev.face_of(twin(crossing)));
  for (auto it = back.rbegin(); it != back.rend(); ++it)
    loop.crossings.push_back(twin(*it));
  return loop;
}

DualLoop vertex_star_loop(const Development& dev, int vertex_id) {
  const auto& cycle = dev.vertices.members.at(vertex_id);
  DualLoop loop;
  for (std::size_t i = 1; i <= cycle.size(); ++i)
    loop.crossings.push_back(cycle[i % cycle.size()]);
  return loop;
}

DualLoop face_encircling_loop(const Development& dev, int face_id) {
  std::vector<Dart> sigma_inv(dev.map.dart_count());
  for (Dart d = 0; d < dev.map.dart_count(); ++d) sigma_inv[dev.map.sigma[d]] = d;

  DualLoop loop;
  for (Dart x : dev.faces.members.at(face_id)) {
    // Walk the corner fan at the head of x, from alongside x to alongside
    // phi(x), crossing the star darts strictly between them.
    const Dart target = dev.map.sigma[dev.map.phi(x)];
    for (Dart z = twin(x); z != target;) {
      const Dart down = sigma_inv[z];
      const Dart c = twin(down);
      if (dev.face_of(c) == face_id || dev.face_of(twin(c)) == face_id)
        throw MapError("face closure touches itself; no embedded encircling loop");
      loop.crossings.push_back(c);
      z = down;
    }
  }
  if (loop.crossings.empty())
    throw MapError("face has no surrounding corner fans to encircle it");
  // Orient the loop so enclosed curvature appears with positive rotation,
  // matching the vertex star loops.
  return inverse_loop(loop);
}

namespace {

long long ext_gcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  long long x1 = 0, y1 = 0;
  const long long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

LatticeMotion motion_power(const LatticeMotion& m, long long k) {
  const LatticeMotion base = k >= 0 ? m : inverse(m);
  if (k < 0) k = -k;
  LatticeMotion acc = motion_identity(m.ring);
  for (long long i = 0; i < k; ++i) acc = compose(acc, base);
  return acc;
}

DualLoop loop_power(const DualLoop& loop, long long k) {
  const DualLoop base = k >= 0 ? loop : inverse_loop(loop);
  if (k < 0) k = -k;
  DualLoop acc;
  for (long long i = 0; i < k; ++i) acc = concat_loops(acc, base);
  return acc;
}

}  // namespace

HolonomyGroup holonomy_group(const Development& dev) {
  const int N = dev.lattice_order;
  const std::vector<Dart> cotree = dev.cotree_darts();

  HolonomyGroup group;
  group.lattice_order = N;
  long long d = N;
  for (Dart c : cotree) d = std::gcd(d, static_cast<long long>(dev.crossing_motion[c].rot));
  group.divisor = static_cast<int>(d);
  if (group.divisor == N) return group;  // trivial group

  for (Dart c : cotree) {
    if (std::gcd(static_cast<long long>(N),
                 static_cast<long long>(dev.crossing_motion[c].rot)) == d) {
      group.generator_loops.push_back(cotree_generator_loop(dev, c));
      break;
    }
  }
  if (group.generator_loops.empty()) {
    // No single loop attains the gcd; combine loops by the extended euclidean
    // recurrence over their rotation parts.
    std::vector<long long> coeff(cotree.size(), 0);
    long long g = N;
    for (std::size_t i = 0; i < cotree.size() && g != d; ++i) {
      const long long rot = dev.crossing_motion[cotree[i]].rot;
      long long u = 0, v = 0;
      const long long g2 = ext_gcd(g, rot, u, v);
      if (g2 == g) continue;
      for (auto& c : coeff) c *= u;
      coeff[i] += v;
      g = g2;
    }
    DualLoop combo;
    for (std::size_t i = 0; i < cotree.size(); ++i)
      if (coeff[i] != 0)
        combo = concat_loops(combo, loop_power(cotree_generator_loop(dev, cotree[i]), coeff[i]));
    group.generator_loops.push_back(combo);
  }
  if (loop_holonomy(dev, group.generator_loops.front()).rot % group.divisor != 0 ||
      std::gcd(static_cast<long long>(N),
               static_cast<long long>(loop_holonomy(dev, group.generator_loops.front()).rot)) !=
          d)
    throw std::logic_error("generator loop does not attain the holonomy generator");
  return group;
}

HolonomyGroup holonomy_group(const SurfaceMap& m, Family family) {
  return holonomy_group(develop(m, family));
}

std::int64_t tiling_lattice_det(Family f) {
  // Translational symmetries of the tiling: the full ring for triangles and
  // squares; for hexagons only translations preserving the two vertex classes
  // (a + b*zeta with a == b mod 3), a sublattice of determinant 3.
  return f == Family::Hexangulation ? 3 : 1;
}

std::optional<TranslationLattice> translation_lattice(const Development& dev) {
  std::vector<LatticePoint> gens;
  for (Dart c : dev.cotree_darts()) {
    const LatticeMotion& m = dev.crossing_motion[c];
    if (m.rot != 0) return std::nullopt;
    gens.push_back(m.trans);
  }
  const auto basis = lattice_span(gens);
  if (!basis)
    throw std::logic_error("trivial rotational holonomy on a torus forces a rank-2 lattice");
  const std::int64_t cell = tiling_lattice_det(dev.family);
  if (basis->det % cell != 0)
    throw std::logic_error("holonomy lattice is not a sublattice of the tiling symmetries");
  if (dev.family == Family::Hexangulation)
    for (LatticePoint p : {basis->u, basis->v})
      if ((p.a - p.b) % 3 != 0)
        throw std::logic_error("hexangulation holonomy translation moves the vertex classes");
  TranslationLattice out;
  out.u = basis->u;
  out.v = basis->v;
  out.det = basis->det;
  out.index = basis->det / cell;
  return out;
}

LatticeMotion develop_walk(const std::vector<int>& turns, Family family) {
  const Ring ring = family_ring(family);
  const int N = rotation_order(ring);
  const auto units = ring_units(ring);
  LatticePoint pos{0, 0};
  int heading = 0;
  for (int t : turns) {
    pos = pos + units[heading];
    heading = mod_n(heading + t, N);
  }
  return make_motion(ring, heading, pos);
}

Report lemma2_crosscheck(const SurfaceMap& m, Family family) {
  Report rep;
  rep.title = "bicolorability versus holonomy bound";
  rep.add("family", family_name(family));

  ColoringKind kind = ColoringKind::Vertex2;
  int bound = 3;
  switch (family) {
    case Family::Triangulation:
      kind = ColoringKind::Face2;
      bound = 3;
      break;
    case Family::Quadrangulation:
      kind = ColoringKind::EdgeAlternating;
      bound = 2;
      break;
    case Family::Hexangulation:
      kind = ColoringKind::Vertex2;
      bound = 3;
      break;
  }
  const SurfaceMap oriented = orient_positively(m);
  const bool colorable = two_colorings(oriented, kind).coloring.has_value();
  const HolonomyGroup group = holonomy_group(oriented, family);
  const bool in_bound = bound % group.order() == 0;

  rep.add("coloring_kind", coloring_kind_name(kind));
  rep.add("colorable", colorable);
  rep.add("holonomy_order", group.order());
  rep.add("holonomy_bound", "C" + std::to_string(bound));
  rep.add("holonomy_in_bound", in_bound);
  rep.add("agree", colorable == in_bound);
  return rep;
}

namespace {

// Torus homology classes of the canonical co-tree loops, computed from exact
// intersection numbers with the primal cycles of a spanning tree.
struct HomologyClasses {
  std::vector<std::array<long long, 2>> cls;  // per co-tree loop
  std::vector<std::vector<long long>> alpha_beta_coeff;  // 2 rows of loop exponents
};

struct RowReduction {
  std::vector<std::vector<long long>> h;  // echelon rows, pivots positive
  std::vector<std::vector<long long>> u;  // u * input = h, unimodular
  std::vector<int> pivot_col;             // per echelon row
};

RowReduction integer_row_reduce(std::vector<std::vector<long long>> a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  RowReduction red;
  red.u.assign(rows, std::vector<long long>(rows, 0));
  for (int i = 0; i < rows; ++i) red.u[i][i] = 1;

  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      int pivot = -1;
      for (int i = r; i < rows; ++i)
        if (a[i][c] != 0 && (pivot < 0 || std::llabs(a[i][c]) < std::llabs(a[pivot][c])))
          pivot = i;
      if (pivot < 0) break;
      std::swap(a[pivot], a[r]);
      std::swap(red.u[pivot], red.u[r]);
      bool clean = true;
      for (int i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        const long long q = a[i][c] / a[r][c];
        for (int j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
        for (int j = 0; j < rows; ++j) red.u[i][j] -= q * red.u[r][j];
        if (a[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0) {
      for (auto& x : a[r]) x = -x;
      for (auto& x : red.u[r]) x = -x;
    }
    red.pivot_col.push_back(c);
    ++r;
  }
  a.resize(r);
  red.h = std::move(a);
  red.u.resize(rows);  // keep all rows; first r are the basis combinations
  return red;
}

HomologyClasses torus_classes(const Development& dev, const std::vector<Dart>& cotree) {
  const SurfaceMap& m = dev.map;
  const int E = m.edge_count;
  const Orbits& vertices = dev.vertices;
  const int V = vertices.count();

  // Primal spanning tree by BFS from vertex 0 over ascending darts.
  std::vector<char> in_primal_tree(E, 0);
  std::vector<int> parent_dart(V, -1);  // dart from parent toward this vertex
  {
    std::vector<char> seen(V, 0);
    seen[0] = 1;
    std::deque<int> queue{0};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (Dart d : vertices.members[v]) {
        const int w = vertices.id_of[twin(d)];
        if (seen[w]) continue;
        seen[w] = 1;
        in_primal_tree[d >> 1] = 1;
        parent_dart[w] = d;
        queue.push_back(w);
      }
    }
  }
  // Signed tree-edge coefficients of the path root -> v (edge oriented along
  // its even dart).
  std::vector<std::vector<long long>> to_vertex(V, std::vector<long long>(E, 0));
  {
    std::vector<int> order{0};
    for (std::size_t i = 0; i < order.size(); ++i)
      for (Dart d : vertices.members[order[i]]) {
        const int w = vertices.id_of[twin(d)];
        if (parent_dart[w] == d) {
          to_vertex[w] = to_vertex[order[i]];
          to_vertex[w][d >> 1] += (d % 2 == 0) ? 1 : -1;
          order.push_back(w);
        }
      }
  }
  // Primal cycle of each non-tree edge e: traverse e along its even dart,
  // return through the tree.
  std::vector<int> nontree;
  for (int e = 0; e < E; ++e)
    if (!in_primal_tree[e]) nontree.push_back(e);
  std::vector<std::vector<long long>> cycle_coeff;
  for (int e : nontree) {
    const int tail = vertices.id_of[2 * e];
    const int head = vertices.id_of[2 * e + 1];
    std::vector<long long> g = to_vertex[tail];
    for (int x = 0; x < E; ++x) g[x] -= to_vertex[head][x];
    g[e] += 1;
    cycle_coeff.push_back(std::move(g));
  }

  // Pairing matrix: intersection number of each co-tree loop with each primal
  // cycle.  Crossing an even dart counts +1, its twin -1.
  std::vector<std::vector<long long>> pairing;
  for (Dart c0 : cotree) {
    const DualLoop loop = cotree_generator_loop(dev, c0);
    std::vector<long long> row(nontree.size(), 0);
    for (Dart c : loop.crossings) {
      const long long s = (c % 2 == 0) ? 1 : -1;
      for (std::size_t j = 0; j < nontree.size(); ++j)
        row[j] += s * cycle_coeff[j][c >> 1];
    }
    pairing.push_back(std::move(row));
  }

  const RowReduction red = integer_row_reduce(pairing);
  if (red.h.size() != 2)
    throw std::logic_error("torus loop pairings must have rank exactly 2");
  const auto& b1 = red.h[0];
  const auto& b2 = red.h[1];
  const int p1 = red.pivot_col[0], p2 = red.pivot_col[1];

  HomologyClasses out;
  for (const auto& row : pairing) {
    if (row[p1] % b1[p1] != 0)
      throw std::logic_error("loop pairing row outside its own row lattice");
    const long long x = row[p1] / b1[p1];
    if ((row[p2] - x * b1[p2]) % b2[p2] != 0)
      throw std::logic_error("loop pairing row outside its own row lattice");
    const long long y = (row[p2] - x * b1[p2]) / b2[p2];
    out.cls.push_back({x, y});
  }
  out.alpha_beta_coeff = {red.u[0], red.u[1]};
  return out;
}

}  // namespace

FundamentalPair fundamental_pair_holonomy(const Development& dev) {
  const std::vector<Dart> cotree = dev.cotree_darts();
  const HomologyClasses hom = torus_classes(dev, cotree);
  const int p = static_cast<int>(cotree.size());

  std::vector<LatticeMotion> mu;
  mu.reserve(cotree.size());
  for (Dart c : cotree) mu.push_back(dev.crossing_motion[c]);

  using Combo = std::vector<std::pair<int, long long>>;  // (loop index, exponent)
  auto combo_motion = [&](const Combo& combo) {
    LatticeMotion acc = motion_identity(dev.ring);
    for (auto [i, k] : combo) acc = compose(acc, motion_power(mu[i], k));
    return acc;
  };
  auto combo_loop = [&](const Combo& combo) {
    DualLoop acc;
    for (auto [i, k] : combo)
      acc = concat_loops(acc, loop_power(cotree_generator_loop(dev, cotree[i]), k));
    return acc;
  };

  std::vector<std::pair<Combo, Combo>> candidates;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) {
      const long long det = hom.cls[i][0] * hom.cls[j][1] - hom.cls[i][1] * hom.cls[j][0];
      if (det == 1 || det == -1)
        candidates.push_back({Combo{{i, 1}}, Combo{{j, 1}}});
    }
  {
    Combo a, b;
    for (int i = 0; i < p; ++i) {
      if (hom.alpha_beta_coeff[0][i] != 0) a.push_back({i, hom.alpha_beta_coeff[0][i]});
      if (hom.alpha_beta_coeff[1][i] != 0) b.push_back({i, hom.alpha_beta_coeff[1][i]});
    }
    candidates.push_back({std::move(a), std::move(b)});
  }

  auto commutator_of = [&](const LatticeMotion& a, const LatticeMotion& b) {
    return compose(a, compose(b, compose(inverse(a), inverse(b))));
  };

  std::size_t chosen = 0;
  bool found = false;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const LatticeMotion a = combo_motion(candidates[k].first);
    const LatticeMotion b = combo_motion(candidates[k].second);
    if (!commutator_of(a, b).is_identity()) {
      chosen = k;
      found = true;
      break;
    }
  }
  if (!found) chosen = 0;

  FundamentalPair out;
  out.alpha_loop = combo_loop(candidates[chosen].first);
  out.beta_loop = combo_loop(candidates[chosen].second);
  out.alpha = combo_motion(candidates[chosen].first);
  out.beta = combo_motion(candidates[chosen].second);
  out.commutator = commutator_of(out.alpha, out.beta);
  return out;
}

}  // namespace torusmaps
