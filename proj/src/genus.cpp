#include "torusmaps/genus.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>
#include <vector>

namespace torusmaps {

namespace {

void validate_graph(const Graph& g) {
  if (g.vertex_count < 1) throw MapError("graph has no vertices");
  for (const auto& [u, v] : g.edges) {
    if (u < 0 || u >= g.vertex_count || v < 0 || v >= g.vertex_count) {
      throw MapError("graph edge endpoint out of range");
    }
  }
}

std::string degree_profile_string(const std::vector<int>& degrees) {
  std::map<int, int> count;
  for (int d : degrees) ++count[d];
  std::string out = "{";
  for (const auto& [d, c] : count) {
    if (out.size() > 1) out += " ";
    out += std::to_string(d);
    if (c > 1) out += "^" + std::to_string(c);
  }
  return out + "}";
}

struct CountingPattern {
  char label;
  int regular_degree;
  int low_degree;
  int high_degree;
  int min_girth;  // also the forced face size 2k/(k-2)
  bool need_bipartite;
  const char* excluded_map;
};

constexpr CountingPattern kPatterns[] = {
    {'a', 6, 5, 7, 3, false, "a 5,7-triangulation of the torus"},
    {'b', 4, 3, 5, 4, false, "a 3,5-quadrangulation of the torus"},
    {'c', 3, 2, 4, 6, true,
     "a 2,4-hexangulation of the torus with bipartite skeleton"},
};

bool degrees_match(const std::vector<int>& degrees, const CountingPattern& p) {
  int low = 0;
  int high = 0;
  for (int d : degrees) {
    if (d == p.low_degree) {
      ++low;
    } else if (d == p.high_degree) {
      ++high;
    } else if (d != p.regular_degree) {
      return false;
    }
  }
  return low == 1 && high == 1;
}

std::string counting_reasoning(const CountingPattern& p) {
  std::ostringstream os;
  os << "every vertex has degree " << p.regular_degree
     << " except one of degree " << p.low_degree << " and one of degree "
     << p.high_degree;
  if (p.need_bipartite) os << ", the graph is bipartite";
  os << ", and the girth is at least " << p.min_girth
     << "; in a torus embedding 0 = chi <= 2E(1/" << p.regular_degree
     << " - 1/2 + 1/" << p.min_girth
     << ") holds with equality only when every face is a " << p.min_girth
     << "-gon disk, so an embedding would be " << p.excluded_map
     << ", which does not exist";
  return os.str();
}

// Smallest possible number of sides of a face in any embedding of g:
// a loop bounds a 1-sided face, parallel edges or a pendant vertex allow a
// 2-sided face, and otherwise a face boundary is a cyclically
// non-backtracking closed walk, which always contains a cycle, so the girth
// is a lower bound.
int min_face_size(const Graph& g) {
  bool has_loop = false;
  std::vector<std::pair<int, int>> undirected;
  undirected.reserve(g.edges.size());
  for (const auto& [u, v] : g.edges) {
    if (u == v) has_loop = true;
    undirected.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (has_loop) return 1;
  std::sort(undirected.begin(), undirected.end());
  const bool has_parallel =
      std::adjacent_find(undirected.begin(), undirected.end()) !=
      undirected.end();
  const std::vector<int> degrees = g.degrees();
  const int min_degree =
      degrees.empty() ? 0 : *std::min_element(degrees.begin(), degrees.end());
  if (has_parallel || min_degree <= 1) return 2;
  const std::optional<int> gi = girth(g);
  return gi ? *gi : 3;
}

// Branch and bound over rotation systems.  sigma is grown one successor at a
// time; within each vertex the assigned successors form disjoint open chains
// that may only close into a cycle once they cover every dart there.  The
// companion permutation phi = sigma o twin is tracked the same way: its open
// chains are partial face boundaries and its closed cycles are finished
// faces.  The search stops as soon as some completion reaches face_target
// faces, and prunes any state whose optimistic face count falls short.
struct EmbedSearch {
  int vertex_count = 0;
  int edge_count = 0;
  int dart_count = 0;
  int min_face = 3;
  int face_target = 0;
  int face_cap = INT_MAX;
  // Zero-slack instance: reaching face_target forces every face to have
  // exactly min_face sides.
  bool tight = false;
  std::vector<int> vert;                   // dart -> endpoint vertex
  std::vector<std::vector<int>> darts_at;  // vertex -> darts, ascending
  std::vector<int> deg;

  std::vector<int> snext, sprev;  // partial sigma and its inverse
  std::vector<int> chain_head;    // valid at a sigma-chain tail: first dart
  std::vector<int> chain_tail;    // valid at a sigma-chain head: last dart
  std::vector<int> chain_len;     // valid at a sigma-chain head

  std::vector<int> face_first;  // valid at a partial face's last dart
  std::vector<int> face_last;   // valid at a partial face's first dart
  std::vector<int> face_len;    // valid at a partial face's first dart

  int links = 0;
  int closed_faces = 0;
  int closed_sides = 0;
  int untouched = 0;   // darts on no partial face yet
  int open_faces = 0;  // partial faces with at least two darts

  std::vector<std::pair<int*, int>> trail;

  long long nodes = 0;
  long long node_budget = 0;
  double budget_seconds = 0.0;
  std::chrono::steady_clock::time_point start;
  bool budget_hit = false;

  void init(const Graph& g) {
    vertex_count = g.vertex_count;
    edge_count = g.edge_count();
    dart_count = 2 * edge_count;
    vert.assign(dart_count, 0);
    for (int k = 0; k < edge_count; ++k) {
      vert[2 * k] = g.edges[k].first;
      vert[2 * k + 1] = g.edges[k].second;
    }
    darts_at.assign(vertex_count, {});
    for (int d = 0; d < dart_count; ++d) darts_at[vert[d]].push_back(d);
    deg.assign(vertex_count, 0);
    for (int v = 0; v < vertex_count; ++v) {
      deg[v] = static_cast<int>(darts_at[v].size());
    }
    snext.assign(dart_count, -1);
    sprev.assign(dart_count, -1);
    chain_head.resize(dart_count);
    chain_tail.resize(dart_count);
    face_first.resize(dart_count);
    face_last.resize(dart_count);
    std::iota(chain_head.begin(), chain_head.end(), 0);
    std::iota(chain_tail.begin(), chain_tail.end(), 0);
    std::iota(face_first.begin(), face_first.end(), 0);
    std::iota(face_last.begin(), face_last.end(), 0);
    chain_len.assign(dart_count, 1);
    face_len.assign(dart_count, 1);
    untouched = dart_count;
  }

  // Optimistic face count: every unfinished face needs at least min_face
  // sides, each open partial face finishes as at most one face, and darts on
  // no partial face yet can only form faces min_face at a time.
  int face_bound() const {
    const int by_chains = closed_faces + open_faces + untouched / min_face;
    const int by_sides = closed_faces + (dart_count - closed_sides) / min_face;
    return std::min(by_chains, by_sides);
  }

  bool out_of_budget() {
    if (budget_hit) return true;
    if (nodes > node_budget) {
      budget_hit = true;
      return true;
    }
    if ((nodes & 1023) == 0) {
      const double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                        start)
              .count();
      if (elapsed > budget_seconds) {
        budget_hit = true;
        return true;
      }
    }
    return false;
  }

  void set_cell(int* cell, int value) {
    trail.emplace_back(cell, *cell);
    *cell = value;
  }

  void undo_to(std::size_t mark) {
    while (trail.size() > mark) {
      *trail.back().first = trail.back().second;
      trail.pop_back();
    }
  }

  // True unless assigning snext[a] = b would close a vertex cycle that does
  // not yet cover every dart of the vertex.
  bool sigma_closure_ok(int a, int b) const {
    return chain_head[a] != b || chain_len[b] == deg[vert[a]];
  }

  // Assign phi(d) = b, i.e. snext[twin(d)] = b.
  void apply(int d, int b) {
    const int a = twin(d);
    set_cell(&snext[a], b);
    set_cell(&sprev[b], a);
    set_cell(&links, links + 1);

    if (chain_head[a] != b) {
      const int h = chain_head[a];
      const int t = chain_tail[b];
      set_cell(&chain_head[t], h);
      set_cell(&chain_tail[h], t);
      set_cell(&chain_len[h], chain_len[h] + chain_len[b]);
    }

    const int first = face_first[d];
    if (first == b) {
      set_cell(&closed_faces, closed_faces + 1);
      set_cell(&closed_sides, closed_sides + face_len[b]);
      if (face_len[b] == 1) {
        set_cell(&untouched, untouched - 1);
      } else {
        set_cell(&open_faces, open_faces - 1);
      }
    } else {
      const int len_d = face_len[first];
      const int len_b = face_len[b];
      const int last = face_last[b];
      set_cell(&face_first[last], first);
      set_cell(&face_last[first], last);
      set_cell(&face_len[first], len_d + len_b);
      const int merged_untouched = untouched - (len_d == 1) - (len_b == 1);
      if (merged_untouched != untouched) set_cell(&untouched, merged_untouched);
      set_cell(&open_faces, open_faces - (len_d > 1) - (len_b > 1) + 1);
    }
  }

  // Whether the optimistic face count still reaches face_target after
  // hypothetically assigning phi(d) = b.  Filtering candidates through this
  // turns tight instances into cascades of forced moves.
  bool child_bound_ok(int d, int b) const {
    int cf = closed_faces;
    int cs = closed_sides;
    int ut = untouched;
    int of = open_faces;
    const int first = face_first[d];
    if (first == b) {
      cf += 1;
      cs += face_len[b];
      if (face_len[b] == 1) ut -= 1; else of -= 1;
    } else {
      const int len_d = face_len[first];
      const int len_b = face_len[b];
      ut -= (len_d == 1) + (len_b == 1);
      of += 1 - (len_d > 1) - (len_b > 1);
    }
    if (cf > face_cap) return false;
    const int by_chains = cf + of + ut / min_face;
    const int by_sides = cf + (dart_count - cs) / min_face;
    return std::min(by_chains, by_sides) >= face_target;
  }

  bool candidate_ok(int d, int b) const {
    if (sprev[b] != -1 || !sigma_closure_ok(twin(d), b)) return false;
    const int first = face_first[d];
    if (tight && first != b) {
      // Every face must have exactly min_face sides, so a merge may not
      // exceed that length, and one that reaches it must already lead back
      // to the vertex where the face started.
      const int merged = face_len[first] + face_len[b];
      if (merged > min_face) return false;
      if (merged == min_face && vert[twin(face_last[b])] != vert[first]) {
        return false;
      }
    }
    return child_bound_ok(d, b);
  }

  bool dfs() {
    ++nodes;
    if (out_of_budget()) return false;
    // Apply forced moves until a branch point, a contradiction, or
    // completion; the caller's trail mark rewinds everything at once.
    while (true) {
      if (face_bound() < face_target || closed_faces > face_cap) return false;
      int forced_d = -1;
      int forced_b = -1;
      int best = -1;
      int best_count = INT_MAX;
      for (int d = 0; d < dart_count; ++d) {
        if (snext[twin(d)] != -1) continue;
        int cnt = 0;
        int only = -1;
        for (int b : darts_at[vert[twin(d)]]) {
          if (candidate_ok(d, b)) {
            ++cnt;
            only = b;
          }
        }
        if (cnt == 0) return false;
        if (cnt == 1) {
          forced_d = d;
          forced_b = only;
          break;
        }
        if (cnt < best_count) {
          best_count = cnt;
          best = d;
        }
      }
      if (forced_d >= 0) {
        apply(forced_d, forced_b);
        continue;
      }
      if (best < 0) return true;  // complete with enough faces
      for (int b : darts_at[vert[twin(best)]]) {
        if (!candidate_ok(best, b)) continue;
        const std::size_t mark = trail.size();
        apply(best, b);
        if (dfs()) return true;
        undo_to(mark);
        if (budget_hit) return false;
      }
      return false;
    }
  }
};

SurfaceMap witness_from_sigma(const Graph& g, std::vector<int> sigma) {
  SurfaceMap m;
  m.name = g.name.empty() ? "embedding" : g.name + "-embedding";
  m.edge_count = g.edge_count();
  m.sigma = std::move(sigma);
  validate_map(m);
  return m;
}

// Arbitrary rotation system (darts in index order around every vertex), used
// when any embedding at all meets the face target.
SurfaceMap default_rotation(const Graph& g) {
  std::vector<std::vector<int>> darts_at(g.vertex_count);
  for (int k = 0; k < g.edge_count(); ++k) {
    darts_at[g.edges[k].first].push_back(2 * k);
    darts_at[g.edges[k].second].push_back(2 * k + 1);
  }
  std::vector<int> sigma(2 * g.edge_count(), -1);
  for (const auto& ring : darts_at) {
    for (std::size_t i = 0; i < ring.size(); ++i) {
      sigma[ring[i]] = ring[(i + 1) % ring.size()];
    }
  }
  return witness_from_sigma(g, std::move(sigma));
}

GenusSearchResult run_genus_search(const Graph& g, int genus_cap, int face_cap,
                                   const GenusSearchOptions& options) {
  validate_graph(g);
  if (g.edges.empty()) throw MapError("genus search requires at least one edge");
  if (genus_cap < 0) throw MapError("genus cap must be nonnegative");
  if (!graph_connected(g)) {
    throw MapError("genus search requires a connected graph");
  }

  GenusSearchResult result;
  const auto start = std::chrono::steady_clock::now();
  const auto finish = [&]() {
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return result;
  };
  const auto attach_witness = [&](SurfaceMap witness) {
    const SurfaceStats stats = classify_surface(witness);
    result.status = GenusSearchStatus::WitnessFound;
    result.witness_genus = stats.genus;
    result.witness = std::move(witness);
  };

  const int vertices = g.vertex_count;
  const int edges = g.edge_count();
  const int face_target = edges - vertices + 2 - 2 * genus_cap;
  const int min_face = min_face_size(g);

  if (face_target <= 1 && face_cap == INT_MAX) {
    // Every rotation system of a connected graph has at least one face.
    attach_witness(default_rotation(g));
    result.note = "every rotation system meets the face target F >= " +
                  std::to_string(face_target);
    return finish();
  }
  if ((2 * edges) / min_face < face_target) {
    result.status = GenusSearchStatus::ExhaustedNoEmbedding;
    std::ostringstream os;
    os << "the face target F >= " << face_target << " for genus <= "
       << genus_cap << " is unreachable: 2E = " << 2 * edges
       << " sides admit at most " << (2 * edges) / min_face
       << " faces of at least " << min_face << " sides";
    result.note = os.str();
    return finish();
  }

  EmbedSearch search;
  search.init(g);
  search.min_face = min_face;
  search.face_target = face_target;
  search.face_cap = face_cap;
  search.tight = (2 * edges == min_face * face_target);
  search.node_budget = options.node_budget;
  search.budget_seconds = options.budget_seconds;
  search.start = start;

  const bool found = search.dfs();
  result.nodes = search.nodes;
  if (found) {
    attach_witness(witness_from_sigma(g, search.snext));
  } else if (search.budget_hit) {
    result.status = GenusSearchStatus::BudgetExceeded;
  } else {
    result.status = GenusSearchStatus::ExhaustedNoEmbedding;
  }
  return finish();
}

}  // namespace

std::string cert_verdict_name(CertVerdict v) {
  switch (v) {
    case CertVerdict::NonToroidalByTheorem: return "non-toroidal-by-theorem";
    case CertVerdict::NonToroidalBySearch: return "non-toroidal-by-search";
    case CertVerdict::ToroidalWithWitness: return "toroidal-with-witness";
    case CertVerdict::Unknown: return "unknown";
  }
  return "unknown";
}

std::string genus_search_status_name(GenusSearchStatus s) {
  switch (s) {
    case GenusSearchStatus::WitnessFound: return "witness-found";
    case GenusSearchStatus::ExhaustedNoEmbedding:
      return "exhausted-no-embedding";
    case GenusSearchStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "budget-exceeded";
}

Certificate certify_non_toroidal(const Graph& g) {
  validate_graph(g);
  Certificate c;
  c.graph_name = g.name;
  c.vertices = g.vertex_count;
  c.edges = g.edge_count();
  c.girth_value = girth(g);
  if (!graph_connected(g)) {
    c.reasoning =
        "the graph is disconnected; certification covers connected graphs "
        "only";
    return c;
  }
  const std::vector<int> degrees = g.degrees();
  std::string near_miss;
  for (const CountingPattern& p : kPatterns) {
    if (!degrees_match(degrees, p)) continue;
    // An acyclic graph has no short cycle, so any girth floor holds.
    if (c.girth_value && *c.girth_value < p.min_girth) {
      near_miss = "the degrees match the " + std::to_string(p.low_degree) +
                  "," + std::to_string(p.high_degree) + " pattern but the " +
                  "girth is " + std::to_string(*c.girth_value) +
                  ", below the required " + std::to_string(p.min_girth);
      continue;
    }
    if (p.need_bipartite && !bipartition(g)) {
      near_miss =
          "the degrees match the 2,4 pattern but the graph is not bipartite";
      continue;
    }
    c.verdict = CertVerdict::NonToroidalByTheorem;
    c.counting_case = p.label;
    c.forced_face_size = p.min_girth;
    c.reasoning = counting_reasoning(p);
    return c;
  }
  c.reasoning = !near_miss.empty()
                    ? near_miss
                    : "the degree profile " + degree_profile_string(degrees) +
                          " matches no counting pattern (5,7 among 6s / 3,5 "
                          "among 4s / 2,4 among 3s bipartite)";
  return c;
}

GenusSearchResult min_genus_search(const Graph& g,
                                   const GenusSearchOptions& options) {
  return run_genus_search(g, options.genus_cap, INT_MAX, options);
}

Certificate certify_with_search(const Graph& g,
                                const GenusSearchOptions& options) {
  Certificate c = certify_non_toroidal(g);
  if (c.verdict != CertVerdict::Unknown) return c;
  GenusSearchResult r = min_genus_search(g, options);
  switch (r.status) {
    case GenusSearchStatus::WitnessFound: {
      if (r.witness_genus == 0 && g.edge_count() - g.vertex_count >= 1) {
        // Prefer a genus-1 witness so the certificate carries chi = 0; a
        // graph whose embeddings are all planar keeps the planar witness.
        GenusSearchResult exact = run_genus_search(
            g, 1, g.edge_count() - g.vertex_count, options);
        if (exact.status == GenusSearchStatus::WitnessFound) r = std::move(exact);
      }
      if (r.witness_genus > 1) break;  // cap above 1 proved nothing toroidal
      const SurfaceStats stats = classify_surface(*r.witness);
      c.verdict = CertVerdict::ToroidalWithWitness;
      c.witness = r.witness;
      std::ostringstream os;
      os << "an explicit rotation system embeds the graph with "
         << stats.faces << " faces and Euler characteristic " << stats.chi
         << " (genus " << stats.genus << ")";
      if (stats.genus == 0) os << "; a planar graph also embeds in the torus";
      c.reasoning = os.str();
      break;
    }
    case GenusSearchStatus::ExhaustedNoEmbedding: {
      std::ostringstream os;
      os << "counting was inconclusive and the exhaustive rotation-system "
            "search found no embedding of genus <= "
         << options.genus_cap << " (" << r.nodes << " nodes)";
      if (!r.note.empty()) os << "; " << r.note;
      if (options.genus_cap >= 1) {
        // Every torus embedding is a rotation system, so an empty search at
        // cap >= 1 rules the torus out.
        c.verdict = CertVerdict::NonToroidalBySearch;
        os << "; the graph is not toroidal";
      }
      c.reasoning = os.str();
      break;
    }
    case GenusSearchStatus::BudgetExceeded: {
      c.reasoning =
          "counting was inconclusive and the rotation-system search ran out "
          "of budget after " +
          std::to_string(r.nodes) + " nodes";
      break;
    }
  }
  return c;
}

Report certificate_report(const Certificate& c) {
  Report r;
  r.title = "toroidality certificate for " +
            (c.graph_name.empty() ? std::string("graph") : c.graph_name);
  if (!c.graph_name.empty()) r.add("graph", c.graph_name);
  r.add("vertices", c.vertices);
  r.add("edges", c.edges);
  r.add("girth", c.girth_value ? std::to_string(*c.girth_value)
                               : std::string("none"));
  r.add("verdict", cert_verdict_name(c.verdict));
  if (c.counting_case != 0) {
    r.add("case", std::string(1, c.counting_case));
    r.add("forced_face_size", c.forced_face_size);
  }
  if (c.witness) {
    const SurfaceStats stats = classify_surface(*c.witness);
    r.add("witness_faces", stats.faces);
    r.add("witness_chi", stats.chi);
    r.add("witness_genus", stats.genus);
  }
  r.add("reasoning", c.reasoning);
  return r;
}

Report genus_search_report(const Graph& g, const GenusSearchResult& r) {
  Report report;
  report.title = "genus search for " +
                 (g.name.empty() ? std::string("graph") : g.name);
  report.add("vertices", g.vertex_count);
  report.add("edges", g.edge_count());
  report.add("status", genus_search_status_name(r.status));
  report.add("nodes", r.nodes);
  if (r.witness) {
    const SurfaceStats stats = classify_surface(*r.witness);
    report.add("witness_faces", stats.faces);
    report.add("witness_chi", stats.chi);
    report.add("witness_genus", stats.genus);
  }
  if (!r.note.empty()) report.add("note", r.note);
  return report;
}

}  // namespace torusmaps
