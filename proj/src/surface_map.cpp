#include "torusmaps/surface_map.hpp"

#include <algorithm>
#include <sstream>

namespace torusmaps {

bool SurfaceMap::has_negative_sign() const {
  if (!signs) return false;
  for (auto s : *signs)
    if (s < 0) return true;
  return false;
}

void validate_map(const SurfaceMap& m) {
  const int n = m.dart_count();
  if (m.edge_count < 0) throw MapError("negative edge count");
  if (static_cast<int>(m.sigma.size()) != n)
    throw MapError("sigma has " + std::to_string(m.sigma.size()) + " entries, expected " +
                   std::to_string(n));
  std::vector<char> seen(n, 0);
  for (int d = 0; d < n; ++d) {
    const int s = m.sigma[d];
    if (s < 0 || s >= n) throw MapError("sigma entry out of range: " + std::to_string(s));
    if (seen[s]) throw MapError("sigma is not a permutation: value " + std::to_string(s) +
                                " repeats");
    seen[s] = 1;
  }
  if (m.signs) {
    if (static_cast<int>(m.signs->size()) != m.edge_count)
      throw MapError("signs length does not match edge count");
    for (auto s : *m.signs)
      if (s != 1 && s != -1) throw MapError("edge sign must be + or -");
  }
}

namespace {

Orbits orbits_of(int n, const std::vector<int>& perm) {
  Orbits o;
  o.id_of.assign(n, -1);
  for (int d = 0; d < n; ++d) {
    if (o.id_of[d] >= 0) continue;
    const int id = o.count();
    o.members.emplace_back();
    for (int x = d; o.id_of[x] < 0; x = perm[x]) {
      o.id_of[x] = id;
      o.members.back().push_back(x);
    }
  }
  return o;
}

// Face walks for signed maps.  Trace states (dart, side): crossing a negative
// edge flips the side, and the reversed side walks the rotation backwards.
// Each face of L sides is traced by exactly two state orbits of length L (one
// per direction), so faces are orbit pairs and lengths come in equal pairs.
std::vector<int> signed_face_lengths(const SurfaceMap& m) {
  const int n = m.dart_count();
  std::vector<int> sigma_inv(n);
  for (int d = 0; d < n; ++d) sigma_inv[m.sigma[d]] = d;
  auto next = [&](int state) {
    const int d = state >> 1;
    int side = state & 1;
    const int t = twin(d);
    if (m.sign_of_edge(d >> 1) < 0) side ^= 1;
    const int nd = side ? sigma_inv[t] : m.sigma[t];
    return (nd << 1) | side;
  };
  std::vector<int> orbit_lengths;
  std::vector<char> seen(2 * n, 0);
  for (int s = 0; s < 2 * n; ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (int x = s; !seen[x]; x = next(x)) {
      seen[x] = 1;
      ++len;
    }
    orbit_lengths.push_back(len);
  }
  std::sort(orbit_lengths.begin(), orbit_lengths.end());
  std::vector<int> lengths;
  for (std::size_t i = 0; i + 1 < orbit_lengths.size(); i += 2) {
    if (orbit_lengths[i] != orbit_lengths[i + 1])
      throw MapError("signed face tracing produced unpaired boundary walks");
    lengths.push_back(orbit_lengths[i]);
  }
  return lengths;
}

// A signed map is orientable iff vertex orientations can absorb all negative
// signs, i.e. the signature is balanced over every cycle of the skeleton.
// Returns the per-vertex orientation, or empty when unbalanced.
std::vector<int> balanced_orientation(const SurfaceMap& m, const Orbits& vertices) {
  const int nv = vertices.count();
  std::vector<int> orient(nv, 0);
  std::vector<int> stack;
  for (int root = 0; root < nv; ++root) {
    if (orient[root] != 0) continue;
    orient[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (Dart d : vertices.members[v]) {
        const int w = vertices.id_of[twin(d)];
        const int want = orient[v] * m.sign_of_edge(d >> 1);
        if (orient[w] == 0) {
          orient[w] = want;
          stack.push_back(w);
        } else if (orient[w] != want) {
          return {};
        }
      }
    }
  }
  return orient;
}

}  // namespace

Orbits vertex_orbits(const SurfaceMap& m) { return orbits_of(m.dart_count(), m.sigma); }

Orbits face_orbits(const SurfaceMap& m) {
  const int n = m.dart_count();
  std::vector<int> phi(n);
  for (int d = 0; d < n; ++d) phi[d] = m.phi(d);
  return orbits_of(n, phi);
}

std::vector<int> face_length_list(const SurfaceMap& m) {
  std::vector<int> lengths;
  if (m.signs && m.has_negative_sign()) {
    lengths = signed_face_lengths(m);
  } else {
    for (const auto& face : face_orbits(m).members)
      lengths.push_back(static_cast<int>(face.size()));
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

SurfaceStats classify_surface(const SurfaceMap& m) {
  SurfaceStats st;
  st.edges = m.edge_count;
  if (m.edge_count == 0) {
    st.orientable = true;
    st.genus = 1;  // vacuous: chi = 0 and the genus formula below
    return st;
  }
  const Orbits vertices = vertex_orbits(m);
  st.vertices = vertices.count();
  st.orientable =
      m.has_negative_sign() ? !balanced_orientation(m, vertices).empty() : true;
  st.faces = m.signs ? static_cast<int>(signed_face_lengths(m).size())
                     : face_orbits(m).count();
  st.chi = st.vertices - st.edges + st.faces;
  st.genus = st.orientable ? (2 - st.chi) / 2 : 2 - st.chi;
  return st;
}

bool is_connected(const SurfaceMap& m) {
  const int n = m.dart_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int d = stack.back();
    stack.pop_back();
    for (int x : {m.sigma[d], twin(d)}) {
      if (!seen[x]) {
        seen[x] = 1;
        ++reached;
        stack.push_back(x);
      }
    }
  }
  return reached == n;
}

namespace {

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string trimmed = line;
    const auto pos = trimmed.find_first_not_of(" \t\r");
    trimmed = pos == std::string::npos ? "" : trimmed.substr(pos);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    out.push_back(trimmed);
  }
  return out;
}

}  // namespace

SurfaceMap parse_map(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw MapError("empty map text");
  SurfaceMap m;

  std::istringstream header(lines[0]);
  std::string kw;
  header >> kw;
  if (kw != "map") throw MapError("expected 'map <name>' on the first line");
  if (!(header >> m.name)) throw MapError("map name missing");

  if (lines.size() < 2) throw MapError("missing 'edges' line");
  std::istringstream edges_line(lines[1]);
  edges_line >> kw;
  if (kw != "edges") throw MapError("expected 'edges <E>'");
  if (!(edges_line >> m.edge_count) || m.edge_count < 0)
    throw MapError("edge count must be a nonnegative integer");

  std::size_t next = 2;
  if (m.edge_count > 0 || (next < lines.size() && lines[next].rfind("sigma", 0) == 0)) {
    if (next >= lines.size()) throw MapError("missing 'sigma' line");
    std::istringstream sigma_line(lines[next++]);
    sigma_line >> kw;
    if (kw != "sigma") throw MapError("expected 'sigma <2E integers>'");
    int v;
    while (sigma_line >> v) m.sigma.push_back(v);
    if (!sigma_line.eof()) throw MapError("sigma contains a non-integer token");
  }

  if (next < lines.size()) {
    std::istringstream signs_line(lines[next]);
    signs_line >> kw;
    if (kw == "signs") {
      std::string spec;
      if (!(signs_line >> spec)) throw MapError("signs line is empty");
      std::vector<std::int8_t> signs;
      for (char c : spec) {
        if (c == '+') signs.push_back(1);
        else if (c == '-') signs.push_back(-1);
        else throw MapError(std::string("invalid sign character '") + c + "'");
      }
      m.signs = std::move(signs);
      ++next;
    }
  }
  if (next < lines.size()) throw MapError("unexpected trailing line: " + lines[next]);

  validate_map(m);
  return m;
}

std::string serialize_map(const SurfaceMap& m) {
  std::ostringstream os;
  os << "map " << (m.name.empty() ? "unnamed" : m.name) << "\n";
  os << "edges " << m.edge_count << "\n";
  if (m.edge_count > 0) {
    os << "sigma";
    for (int v : m.sigma) os << " " << v;
    os << "\n";
  }
  if (m.signs) {
    os << "signs ";
    for (auto s : *m.signs) os << (s > 0 ? '+' : '-');
    os << "\n";
  }
  return os.str();
}

SurfaceMap dual_map(const SurfaceMap& m) {
  if (m.has_negative_sign()) throw MapError("dual of a non-orientably signed map is not defined here");
  SurfaceMap d;
  d.name = m.name + "-dual";
  d.edge_count = m.edge_count;
  d.sigma.resize(m.dart_count());
  for (Dart x = 0; x < m.dart_count(); ++x) d.sigma[x] = m.phi(x);
  return d;
}

SurfaceMap orient_positively(const SurfaceMap& m) {
  if (!m.has_negative_sign()) {
    SurfaceMap out = m;
    out.signs.reset();
    return out;
  }
  const Orbits vertices = vertex_orbits(m);
  const std::vector<int> orient = balanced_orientation(m, vertices);
  if (orient.empty()) throw MapError("map is non-orientable");
  SurfaceMap out = m;
  out.signs.reset();
  for (int v = 0; v < vertices.count(); ++v) {
    if (orient[v] > 0) continue;
    // Reverse the rotation cycle at this vertex.
    const auto& cycle = vertices.members[v];
    const int len = static_cast<int>(cycle.size());
    for (int i = 0; i < len; ++i)
      out.sigma[cycle[(i + 1) % len]] = cycle[i];
  }
  return out;
}

}  // namespace torusmaps
