#pragma once

#include <cstdint>
#include <vector>

#include "torusmaps/surface_map.hpp"

namespace torusmaps {

// Label-invariant encoding of a connected map. Two maps have equal canonical
// forms exactly when some dart relabeling carries one onto the other while
// commuting with sigma and twin (and matching edge signs, when either map
// carries a negative sign). With include_reflection the mirror image -- sigma
// replaced by its inverse -- is folded into the same class.
using CanonicalForm = std::vector<std::uint8_t>;

CanonicalForm canonical_form(const SurfaceMap& m, bool include_reflection = true);

bool maps_isomorphic(const SurfaceMap& a, const SurfaceMap& b,
                     bool include_reflection = true);

}  // namespace torusmaps
