#include "torusmaps/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "torusmaps/canonical.hpp"
#include "torusmaps/cone_metric.hpp"
#include "torusmaps/constructions.hpp"
#include "torusmaps/enumeration.hpp"
#include "torusmaps/genus.hpp"
#include "torusmaps/graph.hpp"
#include "torusmaps/holonomy.hpp"
#include "torusmaps/lattice.hpp"
#include "torusmaps/render.hpp"
#include "torusmaps/report.hpp"
#include "torusmaps/surface_map.hpp"

namespace torusmaps {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MapError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MapError("cannot write file: " + path);
  out << content;
  if (!out) throw MapError("cannot write file: " + path);
}

Family family_from_flag(const std::string& text) {
  const std::optional<Family> f = parse_family(text);
  if (!f)
    throw MapError("unknown family \"" + text +
                   "\" (expected triangulation, quadrangulation or hexangulation)");
  return *f;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::exception&) {
      throw MapError(std::string("cannot parse ") + what + " entry \"" + item +
                     "\" as an integer");
    }
  }
  if (out.empty()) throw MapError(std::string("empty ") + what + " list");
  return out;
}

DualLoop loop_from_flag(const std::string& text) {
  DualLoop loop;
  for (int d : parse_int_list(text, "loop"))
    loop.crossings.push_back(d);
  return loop;
}

std::string degree_profile_of(const SurfaceMap& m) {
  const Orbits vo = vertex_orbits(m);
  std::map<int, int> mult;
  for (const auto& orbit : vo.members) ++mult[static_cast<int>(orbit.size())];
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [deg, count] : mult) {
    if (!first) os << " ";
    first = false;
    os << deg;
    if (count > 1) os << "^" << count;
  }
  os << "}";
  return os.str();
}

void print_report(const Report& r) { std::cout << r.full_text(); }

void add_surface_stats(Report& r, const SurfaceMap& m) {
  const SurfaceStats s = classify_surface(m);
  r.add("vertices", s.vertices);
  r.add("edges", s.edges);
  r.add("faces", s.faces);
  r.add("chi", s.chi);
  r.add("orientable", s.orientable);
  r.add("genus", s.genus);
}

int cmd_validate(const std::string& path) {
  const SurfaceMap m = parse_map(read_file(path));
  validate_map(m);
  Report r;
  r.title = "validation of " + m.name;
  r.add("map", m.name);
  r.add("edges", m.edge_count);
  r.add("darts", m.dart_count());
  r.add("signed", m.signs.has_value());
  r.add("valid", true);
  print_report(r);
  return 0;
}

int cmd_stats(const std::string& path) {
  const SurfaceMap m = parse_map(read_file(path));
  Report r;
  r.title = "surface statistics for " + m.name;
  r.add("map", m.name);
  add_surface_stats(r, m);
  r.add("degrees", degree_profile_of(m));
  print_report(r);
  return 0;
}

int cmd_holonomy(const std::string& path, const std::string& family_flag,
                 const std::string& loop_flag) {
  const SurfaceMap m = parse_map(read_file(path));
  const Family family = family_from_flag(family_flag);
  const Development dev = develop(m, family);
  if (loop_flag.empty()) {
    const HolonomyGroup hg = holonomy_group(dev);
    const std::string h = "C" + std::to_string(hg.order());
    Report r;
    r.title = "holonomy group of " + m.name + " (" + family_name(family) + ")";
    r.add("map", m.name);
    r.add("family", family_name(family));
    r.add("lattice_order", hg.lattice_order);
    r.add("rotation_divisor", hg.divisor);
    r.add("group_order", hg.order());
    r.add("H", h);
    std::cout << r.to_text();
    std::cout << "H = " << h << "\n\n";
    std::cout << r.to_kv_block();
    return 0;
  }
  const DualLoop loop = loop_from_flag(loop_flag);
  const LatticeMotion h = loop_holonomy(dev, loop);
  Report r;
  r.title = "loop holonomy on " + m.name + " (" + family_name(family) + ")";
  r.add("map", m.name);
  r.add("family", family_name(family));
  r.add("crossings", static_cast<long long>(loop.crossings.size()));
  r.add("rotation", h.rot);
  r.add("rotation_order", rotation_order(h.ring));
  r.add("translation", to_string(h.trans));
  print_report(r);
  return 0;
}

int cmd_burgers(const std::string& path, const std::string& family_flag,
                const std::string& loop_flag) {
  const SurfaceMap m = parse_map(read_file(path));
  const Family family = family_from_flag(family_flag);
  const Development dev = develop(m, family);
  const DualLoop loop = loop_from_flag(loop_flag);
  const LatticeMotion h = loop_holonomy(dev, loop);
  Report r;
  r.title = "Burgers vector on " + m.name + " (" + family_name(family) + ")";
  r.add("map", m.name);
  r.add("family", family_name(family));
  r.add("crossings", static_cast<long long>(loop.crossings.size()));
  r.add("rotation", h.rot);
  r.add("rotation_order", rotation_order(h.ring));
  if (h.rot != 0) {
    r.add("defined", false);
    r.add("note",
          "the loop has nonzero rotational holonomy, so its Burgers vector "
          "is undefined");
    print_report(r);
    return 1;
  }
  const LatticePoint b = burgers_canonical(dev.ring, h.trans);
  r.add("defined", true);
  r.add("translation", to_string(h.trans));
  r.add("burgers", to_string(b));
  std::cout << r.to_text();
  std::cout << "b = " << to_string(b) << "\n\n";
  std::cout << r.to_kv_block();
  return 0;
}

int cmd_walk(const std::string& turns_flag, const std::string& family_flag) {
  const Family family = family_from_flag(family_flag);
  const std::vector<int> turns = parse_int_list(turns_flag, "turns");
  const LatticeMotion h = develop_walk(turns, family);
  Report r;
  r.title = "developed walk (" + std::to_string(turns.size()) + " turns, " +
            family_name(family) + ")";
  r.add("family", family_name(family));
  r.add("turns", static_cast<long long>(turns.size()));
  r.add("rotation", h.rot);
  r.add("rotation_order", rotation_order(h.ring));
  r.add("translation", to_string(h.trans));
  print_report(r);
  return 0;
}

int cmd_verify(const std::string& theorem_flag, const VerifyOptions& options) {
  const std::optional<TheoremId> id = parse_theorem_id(theorem_flag);
  if (!id)
    throw MapError("unknown theorem \"" + theorem_flag +
                   "\" (expected T1, T2, T3, T4, T5, HOL, L2 or T6)");
  const VerifyOutcome outcome = verify_theorem(*id, options);
  print_report(outcome.report);
  std::fprintf(stderr, "wall_seconds=%.3f\n", outcome.seconds);
  return outcome.passed && outcome.complete ? 0 : 1;
}

int cmd_enumerate(const std::string& family_flag, int max_vertices,
                  const std::string& degrees_flag, const std::string& dump_dir,
                  long long node_budget, double budget_seconds, int threads) {
  EnumSpec spec;
  spec.family = family_from_flag(family_flag);
  spec.max_vertices = max_vertices;
  spec.node_budget = node_budget;
  spec.budget_seconds = budget_seconds;
  spec.threads = threads;
  if (!degrees_flag.empty()) {
    if (degrees_flag == "regular" || degrees_flag == "none")
      spec.exceptional_degrees = std::vector<int>{};
    else
      spec.exceptional_degrees = parse_int_list(degrees_flag, "degrees");
  }

  std::vector<SurfaceMap> collected;
  std::mutex collected_mutex;
  const bool dumping = !dump_dir.empty();
  const EnumOutcome outcome =
      enumerate_maps(spec, [&](const SurfaceMap& m) {
        if (!dumping) return;
        std::lock_guard<std::mutex> lock(collected_mutex);
        collected.push_back(m);
      });

  long long dumped = 0;
  if (dumping) {
    // Sort by vertex count then canonical encoding so file numbering is
    // stable across thread counts.
    std::vector<std::tuple<int, std::string, const SurfaceMap*>> keyed;
    keyed.reserve(collected.size());
    for (const SurfaceMap& m : collected) {
      const CanonicalForm canon = canonical_form(m, true);
      keyed.emplace_back(vertex_orbits(m).count(),
                         std::string(canon.begin(), canon.end()), &m);
    }
    std::sort(keyed.begin(), keyed.end());
    std::filesystem::create_directories(dump_dir);
    long long index = 0;
    for (const auto& [v, key, mp] : keyed) {
      SurfaceMap out = *mp;
      out.name = std::string(family_name(spec.family)) + "-v" +
                 std::to_string(v) + "-" + std::to_string(++index);
      write_file((std::filesystem::path(dump_dir) / (out.name + ".map")).string(),
                 serialize_map(out));
      ++dumped;
    }
  }

  Report r;
  r.title = "enumeration of " + std::string(family_name(spec.family)) + "s";
  r.add("family", family_name(spec.family));
  r.add("max_vertices", spec.max_vertices);
  if (spec.exceptional_degrees) {
    std::string ds = "{";
    for (std::size_t i = 0; i < spec.exceptional_degrees->size(); ++i) {
      if (i) ds += ",";
      ds += std::to_string((*spec.exceptional_degrees)[i]);
    }
    ds += "}";
    r.add("exceptional_degrees", ds.size() == 2 ? "{} (all regular)" : ds);
  } else {
    r.add("exceptional_degrees", "unconstrained");
  }
  r.add("classes", outcome.classes);
  r.add("nodes", outcome.nodes);
  r.add("complete", outcome.complete);
  if (dumping) r.add("dumped", dumped);
  print_report(r);
  std::fprintf(stderr, "wall_seconds=%.3f\n", outcome.seconds);
  return outcome.complete ? 0 : 1;
}

int cmd_catalogue(const std::string& name, const std::string& out_path) {
  if (name == "list") {
    const std::vector<std::string> names = catalogue_names();
    Report r;
    r.title = "catalogue entries";
    r.add("count", static_cast<long long>(names.size()));
    std::string joined;
    for (const std::string& n : names) {
      if (!joined.empty()) joined += " ";
      joined += n;
    }
    r.add("names", joined);
    print_report(r);
    return 0;
  }
  const SurfaceMap m = catalogue(name);
  const std::string text = serialize_map(m);
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  write_file(out_path, text);
  Report r;
  r.title = "catalogue entry " + m.name;
  r.add("map", m.name);
  add_surface_stats(r, m);
  r.add("degrees", degree_profile_of(m));
  r.add("written", out_path);
  print_report(r);
  return 0;
}

int cmd_certify(const std::string& path, bool search,
                const GenusSearchOptions& options) {
  const Graph g = parse_graph(read_file(path));
  const Certificate c =
      search ? certify_with_search(g, options) : certify_non_toroidal(g);
  print_report(certificate_report(c));
  switch (c.verdict) {
    case CertVerdict::NonToroidalByTheorem:
    case CertVerdict::NonToroidalBySearch:
      return 0;  // certified
    case CertVerdict::ToroidalWithWitness:
    case CertVerdict::Unknown:
      return 1;  // refused: embeddable, or nothing proved
  }
  return 1;
}

int cmd_render(const std::string& path, const std::string& family_flag,
               const std::string& out_path, const std::string& loop_flag,
               int star_vertex, double scale, int copies) {
  const SurfaceMap m = parse_map(read_file(path));
  const Family family = family_from_flag(family_flag);
  const Development dev = develop(m, family);
  RenderOptions options;
  options.scale = scale;
  options.copies = copies;
  if (!loop_flag.empty() && star_vertex >= 0)
    throw MapError("--loop and --star are mutually exclusive");
  if (!loop_flag.empty()) options.highlight = loop_from_flag(loop_flag);
  if (star_vertex >= 0) options.highlight = vertex_star_loop(dev, star_vertex);
  const std::string svg = render_svg(dev, options);
  write_file(out_path, svg);
  Report r;
  r.title = "rendering of " + m.name;
  r.add("map", m.name);
  r.add("family", family_name(family));
  r.add("faces", dev.faces.count());
  r.add("highlighted", options.highlight.has_value());
  r.add("copies", copies);
  r.add("bytes", static_cast<long long>(svg.size()));
  r.add("written", out_path);
  print_report(r);
  return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{
      "torusmaps: exact equilateral torus maps, their holonomy and Burgers "
      "vectors, exhaustive desk-scale checks, and toroidality certificates"};
  app.require_subcommand(1);

  // validate
  auto* sub_validate = app.add_subcommand(
      "validate", "Parse a map file and check it is a rotation system");
  std::string validate_path;
  sub_validate->add_option("file", validate_path, "map file")->required();

  // stats
  auto* sub_stats = app.add_subcommand(
      "stats", "Surface statistics (V, E, F, chi, orientability, genus)");
  std::string stats_path;
  sub_stats->add_option("file", stats_path, "map file")->required();

  // holonomy
  auto* sub_holonomy = app.add_subcommand(
      "holonomy", "Holonomy group of a map, or the holonomy of one dual loop");
  std::string hol_path, hol_family, hol_loop;
  sub_holonomy->add_option("file", hol_path, "map file")->required();
  sub_holonomy->add_option("--family", hol_family,
                           "triangulation, quadrangulation or hexangulation")
      ->required();
  sub_holonomy->add_option("--loop", hol_loop,
                           "comma-separated crossing darts of a dual loop");

  // burgers
  auto* sub_burgers = app.add_subcommand(
      "burgers", "Burgers vector of a dual loop with trivial rotational part");
  std::string bur_path, bur_family, bur_loop;
  sub_burgers->add_option("file", bur_path, "map file")->required();
  sub_burgers->add_option("--family", bur_family,
                          "triangulation, quadrangulation or hexangulation")
      ->required();
  sub_burgers->add_option("--loop", bur_loop,
                          "comma-separated crossing darts of a dual loop")
      ->required();

  // walk
  auto* sub_walk = app.add_subcommand(
      "walk", "Develop a unit-step walk from its left-turn sequence");
  std::string walk_turns, walk_family;
  sub_walk->add_option("--turns", walk_turns,
                       "comma-separated turns in units of 2*pi/N")
      ->required();
  sub_walk->add_option("--family", walk_family,
                       "triangulation, quadrangulation or hexangulation")
      ->required();

  // verify
  auto* sub_verify = app.add_subcommand(
      "verify", "Check a statement over an exhaustive desk-scale slice");
  std::string verify_theorem_flag;
  VerifyOptions verify_options;
  sub_verify->add_option("--theorem", verify_theorem_flag,
                         "T1, T2, T3, T4, T5, HOL, L2 or T6")
      ->required();
  sub_verify->add_option("--max-vertices", verify_options.max_vertices,
                         "slice size; 0 uses the statement's default");
  sub_verify->add_option("--budget-seconds", verify_options.budget_seconds,
                         "wall-clock budget; 0 = unlimited");
  sub_verify->add_option("--node-budget", verify_options.node_budget,
                         "search-node budget; 0 = unlimited");
  sub_verify->add_option("--threads", verify_options.threads,
                         "worker threads (1 = deterministic order)");

  // enumerate
  auto* sub_enumerate = app.add_subcommand(
      "enumerate", "Enumerate isomorphism classes of torus maps");
  std::string enum_family, enum_degrees, enum_dump;
  int enum_max_vertices = 1;
  long long enum_node_budget = 0;
  double enum_budget_seconds = 0.0;
  int enum_threads = 1;
  sub_enumerate->add_option("--family", enum_family,
                            "triangulation, quadrangulation or hexangulation")
      ->required();
  sub_enumerate->add_option("--max-vertices", enum_max_vertices,
                            "largest vertex count to enumerate")
      ->required();
  sub_enumerate->add_option(
      "--degrees", enum_degrees,
      "comma-separated exceptional degrees; \"regular\" forces all-regular; "
      "omit for unconstrained");
  sub_enumerate->add_option("--dump", enum_dump,
                            "write one map file per class into this directory");
  sub_enumerate->add_option("--node-budget", enum_node_budget,
                            "search-node budget; 0 = unlimited");
  sub_enumerate->add_option("--budget-seconds", enum_budget_seconds,
                            "wall-clock budget; 0 = unlimited");
  sub_enumerate->add_option("--threads", enum_threads,
                            "worker threads (1 = deterministic order)");

  // catalogue
  auto* sub_catalogue = app.add_subcommand(
      "catalogue", "Emit a worked example map (\"list\" shows all names)");
  std::string cat_name, cat_out;
  sub_catalogue->add_option("name", cat_name, "entry name or \"list\"")
      ->required();
  sub_catalogue->add_option("--out", cat_out, "write the map file here");

  // certify
  auto* sub_certify = app.add_subcommand(
      "certify",
      "Certify a graph non-toroidal (exit 0 when certified, 1 when toroidal "
      "or inconclusive)");
  std::string cert_path;
  bool cert_search = false;
  GenusSearchOptions cert_options;
  sub_certify->add_option("file", cert_path, "graph file")->required();
  sub_certify->add_flag("--search", cert_search,
                        "fall back to the exhaustive rotation-system search");
  sub_certify->add_option("--genus-cap", cert_options.genus_cap,
                          "largest genus the search rules out");
  sub_certify->add_option("--budget-seconds", cert_options.budget_seconds,
                          "wall-clock budget for the search");
  sub_certify->add_option("--node-budget", cert_options.node_budget,
                          "search-node budget");

  // render
  auto* sub_render = app.add_subcommand(
      "render", "Draw the developed fundamental domain as SVG");
  std::string render_path, render_family, render_out, render_loop;
  int render_star = -1;
  double render_scale = 60.0;
  int render_copies = 1;
  sub_render->add_option("file", render_path, "map file")->required();
  sub_render->add_option("--family", render_family,
                         "triangulation, quadrangulation or hexangulation")
      ->required();
  sub_render->add_option("--out", render_out, "output SVG path")->required();
  sub_render->add_option("--loop", render_loop,
                         "highlight this dual loop (crossing darts)");
  sub_render->add_option("--star", render_star,
                         "highlight the star loop around this vertex id");
  sub_render->add_option("--scale", render_scale, "pixels per unit edge");
  sub_render->add_option("--copies", render_copies,
                         "tile this many translated domain copies per axis "
                         "(flat maps only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(sub_validate)) return cmd_validate(validate_path);
    if (app.got_subcommand(sub_stats)) return cmd_stats(stats_path);
    if (app.got_subcommand(sub_holonomy))
      return cmd_holonomy(hol_path, hol_family, hol_loop);
    if (app.got_subcommand(sub_burgers))
      return cmd_burgers(bur_path, bur_family, bur_loop);
    if (app.got_subcommand(sub_walk)) return cmd_walk(walk_turns, walk_family);
    if (app.got_subcommand(sub_verify))
      return cmd_verify(verify_theorem_flag, verify_options);
    if (app.got_subcommand(sub_enumerate))
      return cmd_enumerate(enum_family, enum_max_vertices, enum_degrees,
                           enum_dump, enum_node_budget, enum_budget_seconds,
                           enum_threads);
    if (app.got_subcommand(sub_catalogue))
      return cmd_catalogue(cat_name, cat_out);
    if (app.got_subcommand(sub_certify))
      return cmd_certify(cert_path, cert_search, cert_options);
    if (app.got_subcommand(sub_render))
      return cmd_render(render_path, render_family, render_out, render_loop,
                        render_star, render_scale, render_copies);
  } catch (const MapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace torusmaps
