#pragma once

#include "hitchin/linalg.hpp"

#include <vector>

namespace hitchin {

// Exact d-dimensional volume of the convex hull of points in Q^d (0 if degenerate).
// Cone decomposition from one vertex over the facets, recursing into each facet.
Q convex_hull_volume(const std::vector<Vec>& points, int d);

}  // namespace hitchin
