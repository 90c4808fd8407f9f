#pragma once

#include "elastica/arc_spline.hpp"

namespace elastica {

// Boundary of the convex hull of the enclosed region, as an arc-spline:
// sub-arcs of the convex (ccw) input arcs joined by bitangent segments.
// Requires a valid class K curve with positive area.
ArcSpline convex_hull(const ArcSpline& c);

}  // namespace elastica
