#pragma once

#include <optional>
#include <string>

#include "torusmaps/holonomy.hpp"

// SVG pictures of developed fundamental domains.  Every face of the
// development is drawn as a polygon from its exact lattice corners; the
// conversion to plane coordinates (eisenstein (a, b) -> (a + b/2, b*sqrt3/2),
// gaussian (a, b) -> (a, b)) happens only here, at emission time.  A dual
// loop can be highlighted as a polyline through face centers and the
// midpoints of the crossed edges; where the loop crosses an edge whose two
// developed copies lie apart in the domain, the polyline breaks into runs.

namespace torusmaps {

struct RenderOptions {
  double scale = 60.0;                // plane units to pixels
  double margin = 24.0;               // padding around the drawing, pixels
  std::optional<DualLoop> highlight;  // dual loop drawn over the faces
  // Tile copies x copies translated images of the domain (the highlight stays
  // in the base copy).  Needs a trivial rotational holonomy, since only then
  // do deck translations exist.
  int copies = 1;
};

std::string render_svg(const Development& dev, const RenderOptions& options = {});

// Develops the map first; same requirements as develop().
std::string render_svg(const SurfaceMap& m, Family family,
                       const RenderOptions& options = {});

// Number of exact-to-plane coordinate conversions performed by this process.
// Rendering is the only code in the library that leaves integer arithmetic,
// so this stays zero until the first render_svg call.
long long render_float_conversions();

}  // namespace torusmaps
