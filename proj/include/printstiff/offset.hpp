#pragma once

#include "printstiff/geometry.hpp"

namespace printstiff {

// Moves every loop of the contour toward the solid by `distance` (outers
// shrink, holes grow). Edges are translated along their inward normal and
// re-joined at their intersections; reflex corners sharper than the miter
// limit are beveled. Self-intersections and loop overlaps produced by the raw
// translation are resolved with the nonzero-positive fill rule, so collapsed
// features vanish and the result may be empty.
LayerContour offset_inward(const LayerContour &contour, double distance);

} // namespace printstiff
