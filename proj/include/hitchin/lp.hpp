#pragma once

#include "hitchin/linalg.hpp"

#include <optional>

namespace hitchin {

// Exact phase-one simplex: some x >= 0 with A x = b, or nothing.
std::optional<Vec> lp_feasible(const Mat& a, const Vec& b);

}  // namespace hitchin
