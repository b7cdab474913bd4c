#include "torusmaps/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "torusmaps/canonical.hpp"
#include "torusmaps/coloring.hpp"
#include "torusmaps/holonomy.hpp"

namespace torusmaps {

namespace {

using Clock = std::chrono::steady_clock;

// One labeled search space: vertex i owns a block of deg[i] consecutive dart
// slots whose sigma-cycle is fixed to the block order, so a map is determined
// by a perfect matching (the twin involution) of the slots.  Every isomorphism
// class with this degree multiset appears among the matchings.
struct DegreePlan {
  std::vector<int> deg;  // descending
  int vertices = 0;
  int edges = 0;
};

// The degree sum and face-size arithmetic a chi = 0 all-n-gon map must
// satisfy; nullopt when no torus map can have this profile.
std::optional<DegreePlan> make_plan(Family family, std::vector<int> deg) {
  DegreePlan plan;
  std::sort(deg.begin(), deg.end(), std::greater<int>());
  if (deg.empty() || deg.back() < 1) return std::nullopt;
  const long long sum = std::accumulate(deg.begin(), deg.end(), 0LL);
  if (sum % 2 != 0) return std::nullopt;
  const long long edges = sum / 2;
  const int n = family_face_size(family);
  const long long vertices = static_cast<long long>(deg.size());
  if (edges < 1 || edges * (n - 2) != n * vertices) return std::nullopt;
  plan.deg = std::move(deg);
  plan.vertices = static_cast<int>(vertices);
  plan.edges = static_cast<int>(edges);
  return plan;
}

std::optional<DegreePlan> constrained_plan(Family family,
                                           const std::vector<int>& exceptional, int vertices) {
  const int m = static_cast<int>(exceptional.size());
  if (vertices < std::max(m, 1)) return std::nullopt;
  std::vector<int> deg = exceptional;
  deg.resize(vertices, family_regular_degree(family));
  return make_plan(family, std::move(deg));
}

// All descending degree sequences with the given length and sum; used for
// unconstrained enumeration, where only the counting relations pin E.
void descending_partitions(int parts, int sum, int cap, std::vector<int>& acc,
                           const std::function<void(const std::vector<int>&)>& out) {
  if (parts == 0) {
    if (sum == 0) out(acc);
    return;
  }
  for (int d = std::min(cap, sum - (parts - 1)); d >= 1; --d) {
    acc.push_back(d);
    descending_partitions(parts - 1, sum - d, d, acc, out);
    acc.pop_back();
  }
}

std::vector<DegreePlan> plans_for(const EnumSpec& spec, int vertices) {
  std::vector<DegreePlan> plans;
  if (spec.exceptional_degrees) {
    for (int d : *spec.exceptional_degrees)
      if (d < 1) throw MapError("exceptional degrees must be positive");
    if (auto plan = constrained_plan(spec.family, *spec.exceptional_degrees, vertices))
      plans.push_back(std::move(*plan));
    return plans;
  }
  const int n = family_face_size(spec.family);
  const long long twice_edges = 2LL * n * vertices / (n - 2);
  if (twice_edges * (n - 2) != 2LL * n * vertices) return plans;  // E not integral
  std::vector<int> acc;
  descending_partitions(vertices, static_cast<int>(twice_edges),
                        static_cast<int>(twice_edges), acc,
                        [&](const std::vector<int>& deg) {
                          if (auto plan = make_plan(spec.family, deg))
                            plans.push_back(std::move(*plan));
                        });
  return plans;
}

// Relabels a slot matching into the dart convention twin(d) = d ^ 1.
SurfaceMap matching_to_map(const std::vector<int>& snext, const std::vector<int>& match) {
  const int dart_count = static_cast<int>(match.size());
  SurfaceMap m;
  m.edge_count = dart_count / 2;
  m.sigma.assign(dart_count, 0);
  std::vector<int> to(dart_count, -1);
  int edge = 0;
  for (int s = 0; s < dart_count; ++s)
    if (s < match[s]) {
      to[s] = 2 * edge;
      to[match[s]] = 2 * edge + 1;
      ++edge;
    }
  for (int s = 0; s < dart_count; ++s) m.sigma[to[s]] = to[snext[s]];
  return m;
}

struct SharedSearch {
  const std::function<void(const SurfaceMap&)>* visit = nullptr;
  std::mutex visit_mutex;
  std::set<CanonicalForm> seen;
  long long classes_in_plan = 0;

  std::atomic<long long> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> complete{true};
  Clock::time_point start;
  long long node_budget = 0;
  double budget_seconds = 0;
  std::string name_prefix;

  bool out_of_budget() {
    if (stop.load(std::memory_order_relaxed)) return true;
    const long long n = nodes.load(std::memory_order_relaxed);
    if (node_budget > 0 && n > node_budget) {
      complete = false;
      stop = true;
      return true;
    }
    if (budget_seconds > 0 && (n & 1023) == 0) {
      const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
      if (elapsed > budget_seconds) {
        complete = false;
        stop = true;
        return true;
      }
    }
    return false;
  }
};

// Matching state for one worker thread.
struct MatchState {
  int face_size = 3;
  int dart_count = 0;
  std::vector<int> snext, sprev;       // fixed block cycles
  std::vector<int> block_start, deg;   // per vertex
  std::vector<int> block_of;           // slot -> vertex
  std::vector<int> block_used;         // matched slots per vertex block
  std::vector<int> match;              // slot -> partner, -1 open
  std::vector<int> trail;              // lower slot of each applied pair
  std::vector<char> visited;           // scratch for chain scans

  void init(const DegreePlan& plan) {
    dart_count = 2 * plan.edges;
    deg = plan.deg;
    block_start.resize(plan.vertices);
    block_of.assign(dart_count, 0);
    block_used.assign(plan.vertices, 0);
    snext.assign(dart_count, 0);
    sprev.assign(dart_count, 0);
    int base = 0;
    for (int v = 0; v < plan.vertices; ++v) {
      block_start[v] = base;
      for (int j = 0; j < deg[v]; ++j) {
        block_of[base + j] = v;
        snext[base + j] = base + (j + 1) % deg[v];
        sprev[base + j] = base + (j + deg[v] - 1) % deg[v];
      }
      base += deg[v];
    }
    match.assign(dart_count, -1);
    trail.clear();
    visited.assign(dart_count, 0);
  }

  void apply(int s, int t) {
    match[s] = t;
    match[t] = s;
    ++block_used[block_of[s]];
    ++block_used[block_of[t]];
    trail.push_back(std::min(s, t));
  }

  void undo_to(std::size_t mark) {
    while (trail.size() > mark) {
      const int s = trail.back();
      trail.pop_back();
      const int t = match[s];
      --block_used[block_of[s]];
      --block_used[block_of[t]];
      match[t] = -1;
      match[s] = -1;
    }
  }

  // Scans every partial face chain.  A chain longer than face_size, a closed
  // cycle of the wrong length, or an unsatisfiable forced closure fails; a
  // chain of exactly face_size darts forces its closing match.
  bool scan(std::vector<std::pair<int, int>>& forced) {
    std::fill(visited.begin(), visited.end(), 0);
    forced.clear();
    for (int h = 0; h < dart_count; ++h) {
      if (match[sprev[h]] != -1) continue;  // has a phi-predecessor
      int d = h, length = 1;
      visited[d] = 1;
      while (match[d] != -1) {
        d = snext[match[d]];
        visited[d] = 1;
        ++length;
        if (length > face_size) return false;
      }
      if (length == face_size) {
        const int u = sprev[h];  // unmatched by the head condition
        if (u == d) return false;
        if (match[u] != -1 || match[d] != -1) return false;
        forced.push_back({std::min(d, u), std::max(d, u)});
      }
    }
    for (int s = 0; s < dart_count; ++s) {
      if (visited[s] || match[s] == -1) continue;  // heads covered open chains
      int d = s, length = 0;
      do {
        visited[d] = 1;
        d = snext[match[d]];
        ++length;
      } while (d != s);
      if (length != face_size) return false;
    }
    return true;
  }

  // Applies (s, t) and every consequent forced closure; false on dead end.
  bool apply_and_propagate(int s, int t) {
    apply(s, t);
    std::vector<std::pair<int, int>> forced;
    for (;;) {
      if (!scan(forced)) return false;
      bool progressed = false;
      for (auto [a, b] : forced) {
        if (match[a] == b) continue;
        if (match[a] != -1 || match[b] != -1 || a == b) return false;
        apply(a, b);
        progressed = true;
      }
      if (!progressed) return true;
    }
  }

  // Tail of the longest open face chain: matching it forces a closure
  // soonest (fail-first).  -1 when every chain is closed; then any leftover
  // slot would start a separate component, so the branch is dead unless the
  // matching is complete.
  int branch_slot() {
    int best = -1, best_length = 0;
    for (int h = 0; h < dart_count; ++h) {
      if (match[sprev[h]] != -1) continue;
      int d = h, length = 1;
      while (match[d] != -1) {
        d = snext[match[d]];
        ++length;
      }
      // Single-dart chains in untouched blocks are fresh starts, not tails.
      if (length == 1 && block_used[block_of[h]] == 0) continue;
      if (length > best_length) {
        best_length = length;
        best = d;
      }
    }
    return best;
  }

  // Partners worth trying for the branch slot.  Blocks with no matched slot
  // yet are interchangeable within a degree value and freely rotatable, so
  // one representative slot per untouched degree value suffices.
  std::vector<int> candidates(int s) {
    std::vector<int> out;
    std::vector<char> degree_taken;  // indexed by degree value
    int max_degree = 0;
    for (std::size_t v = 0; v < deg.size(); ++v) max_degree = std::max(max_degree, deg[v]);
    degree_taken.assign(max_degree + 1, 0);
    for (int t = 0; t < dart_count; ++t) {
      if (t == s || match[t] != -1) continue;
      const int v = block_of[t];
      if (block_used[v] == 0) {
        if (t != block_start[v] || degree_taken[deg[v]]) continue;
        degree_taken[deg[v]] = 1;
      }
      out.push_back(t);
    }
    return out;
  }
};

void finalize_leaf(MatchState& ms, SharedSearch& shared) {
  SurfaceMap m = matching_to_map(ms.snext, ms.match);
  if (!is_connected(m)) return;
  CanonicalForm form = canonical_form(m);
  const std::lock_guard<std::mutex> lock(shared.visit_mutex);
  if (!shared.seen.insert(std::move(form)).second) return;
  ++shared.classes_in_plan;
  m.name = shared.name_prefix + "-c" + std::to_string(shared.classes_in_plan);
  (*shared.visit)(m);
}

void dfs(MatchState& ms, SharedSearch& shared) {
  shared.nodes.fetch_add(1, std::memory_order_relaxed);
  if (shared.out_of_budget()) return;
  if (2 * static_cast<int>(ms.trail.size()) == ms.dart_count) {
    finalize_leaf(ms, shared);
    return;
  }
  const int s = ms.branch_slot();
  if (s < 0) return;  // open slots left only in fresh blocks: disconnected
  for (int t : ms.candidates(s)) {
    const std::size_t mark = ms.trail.size();
    if (ms.apply_and_propagate(s, t)) dfs(ms, shared);
    ms.undo_to(mark);
    if (shared.stop.load(std::memory_order_relaxed)) return;
  }
}

// With nothing matched yet, rotating any block and permuting equal-degree
// blocks are relabelings of the search space, so slot 0 only needs one
// partner per orbit: loop gaps up to deg/2 inside block 0, and the first
// slot of the least block of each other degree value.
std::vector<int> first_slot_candidates(const MatchState& ms) {
  std::vector<int> out;
  for (int gap = 1; 2 * gap <= ms.deg[0]; ++gap) out.push_back(gap);
  std::set<int> seen_degree;
  for (std::size_t v = 1; v < ms.deg.size(); ++v)
    if (seen_degree.insert(ms.deg[v]).second) out.push_back(ms.block_start[v]);
  std::sort(out.begin(), out.end());
  return out;
}

void search_plan(const DegreePlan& plan, const EnumSpec& spec, SharedSearch& shared) {
  MatchState proto;
  proto.face_size = family_face_size(spec.family);
  proto.init(plan);
  if (proto.dart_count == 0) return;

  const std::vector<int> tops = first_slot_candidates(proto);
  const int workers = std::max(1, spec.threads);
  if (workers == 1) {
    for (int t : tops) {
      const std::size_t mark = proto.trail.size();
      if (proto.apply_and_propagate(0, t)) dfs(proto, shared);
      proto.undo_to(mark);
      if (shared.stop.load(std::memory_order_relaxed)) return;
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&]() {
      MatchState ms = proto;
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= tops.size() || shared.stop.load(std::memory_order_relaxed)) return;
        const std::size_t mark = ms.trail.size();
        if (ms.apply_and_propagate(0, tops[i])) dfs(ms, shared);
        ms.undo_to(mark);
      }
    });
  for (auto& th : pool) th.join();
}

std::string plan_prefix(const EnumSpec& spec, const DegreePlan& plan) {
  std::string name = family_name(spec.family);
  name += "-v" + std::to_string(plan.vertices);
  const int regular = family_regular_degree(spec.family);
  std::string exceptional;
  for (int d : plan.deg)
    if (d != regular) exceptional += (exceptional.empty() ? "" : ".") + std::to_string(d);
  name += exceptional.empty() ? "-regular" : "-" + exceptional;
  return name;
}

}  // namespace

EnumOutcome enumerate_maps(const EnumSpec& spec,
                           const std::function<void(const SurfaceMap&)>& visit) {
  if (spec.max_vertices < 1) throw MapError("enumeration needs max_vertices >= 1");
  if (!spec.orientable_only)
    throw MapError("only orientable (sign-free) enumeration is supported");

  SharedSearch shared;
  shared.visit = &visit;
  shared.start = Clock::now();
  shared.node_budget = spec.node_budget;
  shared.budget_seconds = spec.budget_seconds;

  EnumOutcome outcome;
  for (int vertices = 1; vertices <= spec.max_vertices; ++vertices) {
    for (const DegreePlan& plan : plans_for(spec, vertices)) {
      shared.seen.clear();  // degree multisets differ, classes cannot collide
      shared.classes_in_plan = 0;
      shared.name_prefix = plan_prefix(spec, plan);
      search_plan(plan, spec, shared);
      outcome.classes += shared.classes_in_plan;
      if (shared.stop.load()) break;
    }
    if (shared.stop.load()) break;
  }
  outcome.nodes = shared.nodes.load();
  outcome.complete = shared.complete.load();
  outcome.seconds = std::chrono::duration<double>(Clock::now() - shared.start).count();
  return outcome;
}

std::vector<SurfaceMap> enumerate_maps_bruteforce(const EnumSpec& spec) {
  if (spec.max_vertices < 1) throw MapError("enumeration needs max_vertices >= 1");
  if (!spec.orientable_only)
    throw MapError("only orientable (sign-free) enumeration is supported");

  std::map<CanonicalForm, SurfaceMap> classes;
  for (int vertices = 1; vertices <= spec.max_vertices; ++vertices) {
    for (const DegreePlan& plan : plans_for(spec, vertices)) {
      MatchState ms;
      ms.face_size = family_face_size(spec.family);
      ms.init(plan);
      const int n = family_face_size(spec.family);
      std::vector<int> order;
      std::function<void()> extend = [&]() {
        int s = 0;
        while (s < ms.dart_count && ms.match[s] != -1) ++s;
        if (s == ms.dart_count) {
          SurfaceMap m = matching_to_map(ms.snext, ms.match);
          const std::vector<int> lengths = face_length_list(m);
          for (int len : lengths)
            if (len != n) return;
          if (!is_connected(m)) return;
          if (classify_surface(m).chi != 0) return;
          m.name = "reference";
          classes.emplace(canonical_form(m), std::move(m));
          return;
        }
        for (int t = s + 1; t < ms.dart_count; ++t) {
          if (ms.match[t] != -1) continue;
          ms.apply(s, t);
          extend();
          ms.undo_to(ms.trail.size() - 1);
        }
      };
      extend();
    }
  }
  std::vector<SurfaceMap> out;
  out.reserve(classes.size());
  for (auto& [form, m] : classes) out.push_back(std::move(m));
  return out;
}

std::optional<TheoremId> parse_theorem_id(const std::string& text) {
  if (text == "T1") return TheoremId::T1;
  if (text == "T2") return TheoremId::T2;
  if (text == "T3") return TheoremId::T3;
  if (text == "T4") return TheoremId::T4;
  if (text == "T5") return TheoremId::T5;
  if (text == "HOL") return TheoremId::HOL;
  if (text == "L2") return TheoremId::L2;
  if (text == "T6") return TheoremId::T6;
  return std::nullopt;
}

const char* theorem_id_name(TheoremId id) {
  switch (id) {
    case TheoremId::T1: return "T1";
    case TheoremId::T2: return "T2";
    case TheoremId::T3: return "T3";
    case TheoremId::T4: return "T4";
    case TheoremId::T5: return "T5";
    case TheoremId::HOL: return "HOL";
    case TheoremId::L2: return "L2";
    case TheoremId::T6: return "T6";
  }
  return "?";
}

namespace {

struct Slice {
  Family family;
  std::vector<int> exceptional;
  int default_max_vertices;
};

// Desk-scale slice sizes used when the caller does not override them.
std::vector<Slice> slices_for(TheoremId id) {
  switch (id) {
    case TheoremId::T1: return {{Family::Triangulation, {5, 7}, 9}};
    case TheoremId::T2: return {{Family::Quadrangulation, {3, 5}, 10}};
    case TheoremId::T3: return {{Family::Hexangulation, {2, 4}, 12}};
    case TheoremId::T4: return {{Family::Triangulation, {4, 8}, 9}};
    case TheoremId::T5: return {{Family::Quadrangulation, {2, 6}, 10}};
    case TheoremId::HOL:
      return {{Family::Triangulation, {4, 8}, 9},
              {Family::Triangulation, {3, 9}, 9},
              {Family::Quadrangulation, {2, 6}, 10},
              {Family::Hexangulation, {2, 4}, 12}};
    case TheoremId::L2:
      // Cone slices exercise the uncolorable direction, regular slices the
      // colorable one, so the equivalence is checked both ways.
      return {{Family::Triangulation, {4, 8}, 9},
              {Family::Triangulation, {3, 9}, 9},
              {Family::Quadrangulation, {2, 6}, 10},
              {Family::Hexangulation, {2, 4}, 12},
              {Family::Triangulation, {}, 6},
              {Family::Quadrangulation, {}, 6},
              {Family::Hexangulation, {}, 8}};
    case TheoremId::T6:
      return {{Family::Triangulation, {}, 9},
              {Family::Quadrangulation, {}, 9},
              {Family::Hexangulation, {}, 9}};
  }
  return {};
}

ColoringKind coloring_for(Family family) {
  switch (family) {
    case Family::Triangulation: return ColoringKind::Face2;
    case Family::Quadrangulation: return ColoringKind::EdgeAlternating;
    case Family::Hexangulation: return ColoringKind::Vertex2;
  }
  return ColoringKind::Vertex2;
}

int forced_holonomy_order(Family family) {
  // For two cone points of curvature +-N/n', the holonomy theorem plus
  // Lagrange leaves a single possible group order.
  return family == Family::Quadrangulation ? 4 : 6;
}

std::string degrees_label(const std::vector<int>& exceptional) {
  if (exceptional.empty()) return "regular";
  std::string out;
  for (int d : exceptional) out += (out.empty() ? "" : ",") + std::to_string(d);
  return out;
}

}  // namespace

VerifyOutcome verify_theorem(TheoremId id, const VerifyOptions& options) {
  const Clock::time_point start = Clock::now();
  VerifyOutcome outcome;
  Report& report = outcome.report;
  report.title = std::string("verification of ") + theorem_id_name(id);
  report.add("theorem", theorem_id_name(id));

  long long total_instances = 0;
  long long total_violations = 0;
  bool complete = true;
  bool every_slice_nonempty = true;
  std::vector<std::string> failures;

  const std::vector<Slice> slices = slices_for(id);
  for (std::size_t i = 0; i < slices.size(); ++i) {
    const Slice& slice = slices[i];
    EnumSpec spec;
    spec.family = slice.family;
    spec.exceptional_degrees = slice.exceptional;
    spec.max_vertices =
        options.max_vertices > 0 ? options.max_vertices : slice.default_max_vertices;
    spec.node_budget = options.node_budget;
    spec.budget_seconds = options.budget_seconds;
    spec.threads = options.threads;

    long long instances = 0;
    long long violations = 0;
    std::map<std::string, long long> notes;

    const auto check = [&](const SurfaceMap& m) {
      ++instances;
      switch (id) {
        case TheoremId::T1:
        case TheoremId::T2:
          // Existence alone is the violation.
          ++violations;
          failures.push_back(m.name);
          break;
        case TheoremId::T3:
        case TheoremId::T4:
        case TheoremId::T5: {
          const auto result = two_colorings(m, coloring_for(slice.family));
          if (result.coloring.has_value()) {
            ++violations;
            failures.push_back(m.name);
          }
          break;
        }
        case TheoremId::HOL: {
          const ConeStructure cones = cone_points(m, slice.family);
          const HolonomyGroup group = holonomy_group(m, slice.family);
          const bool two_cone = cones.n_prime.has_value();
          const int n_prime = two_cone ? *cones.n_prime : 0;
          const bool divides = two_cone && group.order() % n_prime == 0;
          const bool strict = two_cone && group.order() > n_prime;
          const bool exact = group.order() == forced_holonomy_order(slice.family);
          if (!(two_cone && divides && strict && exact)) {
            ++violations;
            failures.push_back(m.name);
          }
          ++notes["order" + std::to_string(group.order())];
          break;
        }
        case TheoremId::L2: {
          const Report cross = lemma2_crosscheck(m, slice.family);
          const std::string* agree = cross.find("agree");
          const std::string* colorable = cross.find("colorable");
          if (agree == nullptr || *agree != "true") {
            ++violations;
            failures.push_back(m.name);
          }
          if (colorable != nullptr)
            ++notes[*colorable == "true" ? "colorable" : "uncolorable"];
          break;
        }
        case TheoremId::T6: {
          const Development dev = develop(m, slice.family);
          const HolonomyGroup group = holonomy_group(dev);
          const auto lattice = translation_lattice(dev);
          const int v_min = slice.family == Family::Hexangulation ? 2 : 1;
          const int vertices = dev.vertices.count();
          const bool quotient = group.order() == 1 && lattice.has_value() &&
                                lattice->index * v_min == vertices;
          if (!quotient) {
            ++violations;
            failures.push_back(m.name);
          }
          ++notes["v" + std::to_string(vertices) + "_classes"];
          break;
        }
      }
    };

    const EnumOutcome enum_result = enumerate_maps(spec, check);
    complete = complete && enum_result.complete;
    total_instances += instances;
    total_violations += violations;
    if (instances == 0) every_slice_nonempty = false;

    const std::string prefix =
        std::string(family_name(slice.family)) + "_" + degrees_label(slice.exceptional);
    report.add(prefix + "_max_vertices", spec.max_vertices);
    report.add(prefix + "_instances", instances);
    report.add(prefix + "_violations", violations);
    report.add(prefix + "_nodes", enum_result.nodes);
    for (const auto& [key, value] : notes) report.add(prefix + "_" + key, value);
  }

  bool passed = false;
  switch (id) {
    case TheoremId::T1:
    case TheoremId::T2:
      passed = total_instances == 0;
      break;
    case TheoremId::T3:
    case TheoremId::T4:
    case TheoremId::T5:
      passed = total_violations == 0 && total_instances >= 1;
      break;
    case TheoremId::HOL:
    case TheoremId::L2:
    case TheoremId::T6:
      passed = total_violations == 0 && every_slice_nonempty;
      break;
  }
  passed = passed && complete;

  report.add("instances", total_instances);
  report.add("violations", total_violations);
  if (!failures.empty()) {
    std::string joined;
    for (const std::string& name : failures) {
      if (joined.size() > 200) {
        joined += ",...";
        break;
      }
      joined += (joined.empty() ? "" : ",") + name;
    }
    report.add("failing_maps", joined);
  }
  report.add("complete", complete);
  report.add("verdict", passed ? "pass" : "fail");

  outcome.passed = passed;
  outcome.complete = complete;
  outcome.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return outcome;
}

}  // namespace torusmaps
