#include "torusmaps/render.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <set>
#include <utility>
#include <vector>

namespace torusmaps {

namespace {

std::atomic<long long> g_conversions{0};

struct PlanePoint {
  double x = 0.0;
  double y = 0.0;
};

PlanePoint to_plane(Ring ring, LatticePoint p) {
  g_conversions.fetch_add(1, std::memory_order_relaxed);
  const double a = static_cast<double>(p.a);
  const double b = static_cast<double>(p.b);
  if (ring == Ring::Eisenstein) return {a + 0.5 * b, b * std::sqrt(3.0) / 2.0};
  return {a, b};
}

std::string num(double v) {
  if (std::fabs(v) < 0.005) v = 0.0;  // avoid "-0.00"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Doubled midpoint of the segment dart d traces in its face's frame.  Kept
// doubled so it stays a lattice point; two crossings meet at the same edge
// midpoint exactly when these agree.
LatticePoint doubled_midpoint(const Development& dev, Dart d) {
  const LatticePoint c = dev.dart_corner[d];
  return c + c + dev.dart_vector(d);
}

struct LoopRun {
  std::vector<PlanePoint> points;
};

// The highlighted loop as polyline runs: inside each visited face the loop
// goes entry midpoint -> center -> exit midpoint, starting and ending at the
// center of the first face.  A new run starts whenever the crossed edge's two
// developed copies do not coincide in the domain.
std::vector<LoopRun> loop_runs(const Development& dev,
                               const std::vector<PlanePoint>& face_center,
                               const DualLoop& loop) {
  const int dart_count = static_cast<int>(dev.map.sigma.size());
  if (loop.crossings.empty()) throw MapError("cannot draw an empty dual loop");
  for (Dart d : loop.crossings)
    if (d < 0 || d >= dart_count) throw MapError("loop crossing dart out of range");
  const int k = static_cast<int>(loop.crossings.size());
  for (int i = 0; i < k; ++i) {
    const Dart next = loop.crossings[(i + 1) % k];
    if (dev.face_of(twin(loop.crossings[i])) != dev.face_of(next))
      throw MapError("loop crossings do not form a closed dual path");
  }

  const auto half_plane = [&](LatticePoint doubled) {
    const PlanePoint p = to_plane(dev.ring, doubled);
    return PlanePoint{0.5 * p.x, 0.5 * p.y};
  };

  std::vector<LoopRun> runs;
  runs.emplace_back();
  runs.back().points.push_back(face_center[dev.face_of(loop.crossings[0])]);
  for (int i = 0; i < k; ++i) {
    const Dart out = loop.crossings[i];
    runs.back().points.push_back(half_plane(doubled_midpoint(dev, out)));
    const Dart in = twin(out);
    if (doubled_midpoint(dev, in) != doubled_midpoint(dev, out)) {
      runs.emplace_back();
      runs.back().points.push_back(half_plane(doubled_midpoint(dev, in)));
    }
    runs.back().points.push_back(face_center[dev.face_of(in)]);
  }
  return runs;
}

}  // namespace

std::string render_svg(const Development& dev, const RenderOptions& options) {
  if (dev.map.edge_count == 0) throw MapError("nothing to develop: map has no edges");
  if (options.scale <= 0.0) throw MapError("render scale must be positive");
  if (options.copies < 1) throw MapError("render copies must be at least 1");

  // Exact translation offsets of the drawn domain copies, base copy first.
  std::vector<LatticePoint> offsets{LatticePoint{0, 0}};
  if (options.copies > 1) {
    const std::optional<TranslationLattice> tl = translation_lattice(dev);
    if (!tl)
      throw MapError(
          "fundamental-domain copies require trivial rotational holonomy");
    for (int i = 0; i < options.copies; ++i)
      for (int j = 0; j < options.copies; ++j) {
        if (i == 0 && j == 0) continue;
        offsets.push_back({i * tl->u.a + j * tl->v.a, i * tl->u.b + j * tl->v.b});
      }
  }

  // Exact corners per face and copy, converted once; centers of the base
  // copy averaged from the floats for the highlight polyline.
  const int face_count = dev.faces.count();
  std::vector<std::vector<PlanePoint>> face_pts;
  std::vector<PlanePoint> face_center(face_count);
  std::set<std::pair<std::int64_t, std::int64_t>> seen_corner;
  std::vector<PlanePoint> corner_dots;
  for (std::size_t k = 0; k < offsets.size(); ++k) {
    for (int f = 0; f < face_count; ++f) {
      std::vector<PlanePoint> poly;
      for (Dart d : dev.faces.members[f]) {
        const LatticePoint c = dev.dart_corner[d] + offsets[k];
        const PlanePoint p = to_plane(dev.ring, c);
        poly.push_back(p);
        if (k == 0) {
          face_center[f].x += p.x;
          face_center[f].y += p.y;
        }
        if (seen_corner.insert({c.a, c.b}).second) corner_dots.push_back(p);
      }
      if (k == 0) {
        const double n = static_cast<double>(poly.size());
        face_center[f].x /= n;
        face_center[f].y /= n;
      }
      face_pts.push_back(std::move(poly));
    }
  }

  std::vector<LoopRun> runs;
  if (options.highlight) runs = loop_runs(dev, face_center, *options.highlight);

  double min_x = face_pts[0][0].x, max_x = min_x;
  double min_y = face_pts[0][0].y, max_y = min_y;
  for (const auto& pts : face_pts)
    for (const PlanePoint& p : pts) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  const double width = (max_x - min_x) * options.scale + 2.0 * options.margin;
  const double height = (max_y - min_y) * options.scale + 2.0 * options.margin;
  // SVG y grows downward; flip so the developed plane keeps its orientation.
  const auto px = [&](PlanePoint p) {
    return PlanePoint{(p.x - min_x) * options.scale + options.margin,
                      (max_y - p.y) * options.scale + options.margin};
  };
  const auto xy = [&](PlanePoint p) {
    const PlanePoint q = px(p);
    return num(q.x) + "," + num(q.y);
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num(width) + "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) +
         " " + num(height) + "\">\n";
  const std::string title = dev.map.name.empty() ? "developed map" : dev.map.name;
  svg += "  <title>" + title + "</title>\n";
  svg += "  <g fill=\"#e9eef6\" stroke=\"#1a1a1a\" stroke-width=\"2\" "
         "stroke-linejoin=\"round\">\n";
  for (const auto& poly : face_pts) {
    svg += "    <polygon points=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (i) svg += " ";
      svg += xy(poly[i]);
    }
    svg += "\"/>\n";
  }
  svg += "  </g>\n";
  if (!runs.empty()) {
    svg += "  <g fill=\"none\" stroke=\"#c87a14\" stroke-width=\"3.5\" "
           "stroke-linecap=\"round\" stroke-linejoin=\"round\">\n";
    for (const LoopRun& run : runs) {
      svg += "    <polyline points=\"";
      for (std::size_t i = 0; i < run.points.size(); ++i) {
        if (i) svg += " ";
        svg += xy(run.points[i]);
      }
      svg += "\"/>\n";
    }
    svg += "  </g>\n";
  }
  svg += "  <g fill=\"#1a1a1a\" stroke=\"none\">\n";
  for (const PlanePoint& p : corner_dots) {
    const PlanePoint q = px(p);
    svg += "    <circle cx=\"" + num(q.x) + "\" cy=\"" + num(q.y) + "\" r=\"3\"/>\n";
  }
  svg += "  </g>\n";
  svg += "</svg>\n";
  return svg;
}

std::string render_svg(const SurfaceMap& m, Family family, const RenderOptions& options) {
  if (m.edge_count == 0) throw MapError("nothing to develop: map has no edges");
  return render_svg(develop(m, family), options);
}

long long render_float_conversions() {
  return g_conversions.load(std::memory_order_relaxed);
}

}  // namespace torusmaps
