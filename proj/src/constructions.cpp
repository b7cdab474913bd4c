#include "torusmaps/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace torusmaps {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Indexes the cosets of the span of a basis: coset of p is the unique grid
// point (a', b') with 0 <= a' < d1, 0 <= b' < d2 of the Hermite form.
struct CosetIndex {
  LatticeBasisHNF h{};

  explicit CosetIndex(const std::vector<LatticePoint>& gens) {
    const auto span = lattice_span(gens);
    if (!span) throw MapError("quotient basis is singular");
    h = *span;
  }

  long long count() const { return h.det; }

  LatticePoint reduce(LatticePoint p) const {
    const long long q = floor_div(p.a, h.u.a);
    p.a -= q * h.u.a;
    p.b -= q * h.u.b;
    p.b -= floor_div(p.b, h.v.b) * h.v.b;
    return p;
  }

  long long index(const LatticePoint& p) const {
    const LatticePoint r = reduce(p);
    return r.a * h.v.b + r.b;
  }

  LatticePoint rep(long long idx) const {
    return LatticePoint{idx / h.v.b, idx % h.v.b};
  }
};

// Relabels darts so that twins are the pairs (2k, 2k+1).
SurfaceMap from_abstract(std::string name, const std::vector<long long>& sig,
                         const std::vector<long long>& tw) {
  const long long n = static_cast<long long>(sig.size());
  std::vector<int> label(sig.size(), -1);
  int next = 0;
  for (long long x = 0; x < n; ++x) {
    if (label[x] >= 0) continue;
    if (tw[x] == x || tw[tw[x]] != x) throw std::logic_error("broken twin involution");
    label[x] = next;
    label[tw[x]] = next + 1;
    next += 2;
  }
  SurfaceMap m;
  m.name = std::move(name);
  m.edge_count = static_cast<int>(n / 2);
  m.sigma.assign(sig.size(), 0);
  for (long long x = 0; x < n; ++x) m.sigma[label[x]] = label[sig[x]];
  validate_map(m);
  return m;
}

std::string point_token(const LatticePoint& p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

int class_mod3(const LatticePoint& p) {
  return static_cast<int>((((p.a - p.b) % 3) + 3) % 3);
}

}  // namespace

SurfaceMap lattice_quotient(const LatticeBasis& basis, Family family) {
  const Ring ring = family_ring(family);
  if (basis.ring != ring)
    throw MapError("quotient basis must live in the lattice of the family");
  if (family == Family::Hexangulation &&
      ((class_mod3(basis.u) != 0) || (class_mod3(basis.v) != 0)))
    throw MapError("hexangulation quotient basis must preserve the vertex classes");

  const CosetIndex cosets({basis.u, basis.v});
  const long long det = cosets.count();
  const auto& units = ring_units(ring);
  const std::string name = "quotient-" + std::string(family_name(family)) + "-" +
                           point_token(basis.u) + "-" + point_token(basis.v);

  if (family == Family::Triangulation || family == Family::Quadrangulation) {
    const int deg = family_regular_degree(family);  // 6 or 4
    std::vector<long long> sig(static_cast<std::size_t>(det) * deg);
    std::vector<long long> tw(sig.size());
    for (long long v = 0; v < det; ++v) {
      const LatticePoint p = cosets.rep(v);
      for (int k = 0; k < deg; ++k) {
        const long long d = v * deg + k;
        sig[d] = v * deg + (k + 1) % deg;
        tw[d] = cosets.index(p + units[k]) * deg + (k + deg / 2) % deg;
      }
    }
    return from_abstract(name, sig, tw);
  }

  // Hexangulation: vertices are the two nonzero classes of points mod 3; the
  // class-0 cosets are hexagon centers.
  std::vector<long long> role(det, -1);  // vertex id, or -1 for centers
  std::vector<bool> black(det, false);
  long long vertex_count = 0;
  for (long long c = 0; c < det; ++c) {
    const int cls = class_mod3(cosets.rep(c));
    if (cls == 0) continue;
    role[c] = vertex_count++;
    black[c] = (cls == 1);
  }
  if (vertex_count != 2 * det / 3) throw std::logic_error("hexangulation classes out of balance");
  std::vector<long long> sig(static_cast<std::size_t>(vertex_count) * 3);
  std::vector<long long> tw(sig.size());
  for (long long c = 0; c < det; ++c) {
    if (role[c] < 0) continue;
    const LatticePoint p = cosets.rep(c);
    for (int j = 0; j < 3; ++j) {
      const long long d = role[c] * 3 + j;
      sig[d] = role[c] * 3 + (j + 1) % 3;
      // Black vertices point along even unit directions, white along odd.
      const int dir = black[c] ? 2 * j : 2 * j + 1;
      const long long head = cosets.index(p + units[dir]);
      if (role[head] < 0 || black[head] == black[c])
        throw std::logic_error("hexangulation edge does not join the two classes");
      const int back = black[c] ? (j + 1) % 3 : (j + 2) % 3;
      tw[d] = role[head] * 3 + back;
    }
  }
  return from_abstract(name, sig, tw);
}

SurfaceMap refine(const SurfaceMap& m, Family family) {
  if (family == Family::Hexangulation)
    throw MapError("refinement is defined for triangulations and quadrangulations");
  const SurfaceMap base = orient_positively(m);
  const int side = family_face_size(family);
  for (int len : face_length_list(base))
    if (len != side)
      throw MapError("refinement requires every face to have " + std::to_string(side) + " sides");

  const int e = base.edge_count;
  const int n = 2 * e;
  std::vector<int> sigma_inv(n);
  for (int d = 0; d < n; ++d) sigma_inv[base.sigma[d]] = d;

  SurfaceMap out;
  out.name = "refine(" + base.name + ")";
  out.edge_count = 2 * n;
  out.sigma.assign(4 * n, 0);
  // New edges: edge d (d a dart of the base) runs from the tail of d to the
  // midpoint of its edge; edge n + d is the segment leaving that midpoint
  // into the face left of d.
  for (int d = 0; d < n; ++d) {
    const int t = twin(d);
    const int phi_d = base.phi(d);
    const int phi_inv_d = twin(sigma_inv[d]);
    out.sigma[2 * d] = 2 * base.sigma[d];
    if (family == Family::Triangulation) {
      // Midlines: edge n + d joins the midpoints of d's edge and phi(d)'s,
      // cutting off the corner triangle at the head of d.
      out.sigma[2 * d + 1] = 2 * (n + phi_inv_d) + 1;
      out.sigma[2 * (n + d)] = 2 * t + 1;
      out.sigma[2 * (n + d) + 1] = 2 * (n + phi_d);
    } else {
      // Spokes: edge n + d joins the midpoint of d's edge to the center of
      // the face left of d.
      out.sigma[2 * d + 1] = 2 * (n + d);
      out.sigma[2 * (n + d)] = 2 * t + 1;
      out.sigma[2 * (n + d) + 1] = 2 * (n + phi_inv_d) + 1;
    }
  }
  validate_map(out);
  return out;
}

SurfaceMap flip_edge(const SurfaceMap& m, int edge) {
  const SurfaceMap base = orient_positively(m);
  if (edge < 0 || edge >= base.edge_count)
    throw MapError("edge index out of range");
  const int a = 2 * edge, b = 2 * edge + 1;
  const int a1 = base.phi(a), a2 = base.phi(a1);
  const int b1 = base.phi(b), b2 = base.phi(b1);
  if (base.phi(a2) != a || base.phi(b2) != b)
    throw MapError("flip requires a triangle on both sides of the edge");
  if (a1 == b || a2 == b)
    throw MapError("edge has the same face on both sides");
  if ((a1 >> 1) == (b1 >> 1) || (a1 >> 1) == (b2 >> 1) || (a2 >> 1) == (b1 >> 1) ||
      (a2 >> 1) == (b2 >> 1))
    throw MapError("the triangles beside the edge share a second edge");

  SurfaceMap out = base;
  out.name = "flip(" + base.name + "," + std::to_string(edge) + ")";
  // Splice the diagonal out of its two endpoints, then insert it across the
  // other corners of the surrounding quadrilateral.
  out.sigma[twin(a2)] = b1;
  out.sigma[twin(b2)] = a1;
  out.sigma[twin(a1)] = a;
  out.sigma[a] = a2;
  out.sigma[twin(b1)] = b;
  out.sigma[b] = b2;
  validate_map(out);
  return out;
}

Graph graph_edge_swap(const Graph& g, int i, int j, int k) {
  if (i == j || i == k || j == k) throw MapError("edge swap endpoints must be distinct");
  if (i < 0 || j < 0 || k < 0 || i >= g.vertex_count || j >= g.vertex_count ||
      k >= g.vertex_count)
    throw MapError("edge swap vertex out of range");
  Graph out = g;
  out.name = g.name + "-swap";
  int found = -1;
  for (std::size_t e = 0; e < out.edges.size(); ++e) {
    const auto [x, y] = out.edges[e];
    if ((x == i && y == k) || (x == k && y == i))
      throw MapError("edge swap target is already adjacent");
    if (found < 0 && ((x == i && y == j) || (x == j && y == i)))
      found = static_cast<int>(e);
  }
  if (found < 0) throw MapError("edge swap requires the removed edge to be present");
  out.edges[found] = {i, k};
  return out;
}

const std::vector<std::string>& catalogue_names() {
  static const std::vector<std::string> names = {
      "fig1a", "fig1b", "fig1c-1", "fig1c-2", "fig2a", "fig2b", "fig3a", "fig3b",
      "fig3c", "fig3d", "fig4a", "fig4b", "fig5a", "fig5b", "fig5c"};
  return names;
}

namespace {
std::string data_directory() {
  if (const char* env = std::getenv("TORUSMAPS_DATA"); env != nullptr && *env != '\0')
    return env;
#ifdef TORUSMAPS_DATA_DIR
  return TORUSMAPS_DATA_DIR;
#else
  return "data";
#endif
}
}  // namespace

SurfaceMap catalogue(const std::string& name) {
  const auto& names = catalogue_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    std::string all;
    for (const auto& n : names) all += (all.empty() ? "" : ", ") + n;
    throw MapError("unknown catalogue entry '" + name + "' (known: " + all + ")");
  }
  const std::string path = data_directory() + "/" + name + ".map";
  std::ifstream in(path);
  if (!in) throw MapError("cannot open catalogue file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_map(text.str());
}

}  // namespace torusmaps
