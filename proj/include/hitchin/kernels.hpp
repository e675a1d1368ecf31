#pragma once

#include "hitchin/polytope.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace hitchin {

enum class Backend { serial, parallel };

// Lattice box around the hull, in coordinates of a basis of X_*(M).
struct LatticeBox {
  Mat basis;                     // X_*(M) basis in ambient coordinates
  Vec offset;                    // coordinates of xi_M
  std::vector<long> lo, hi;      // integer shifts k with offset + k in the hull's box
  std::uint64_t size() const;
  Vec point(std::uint64_t index) const;
};

LatticeBox hull_lattice_box(const PositiveOrthogonalFamily& f, const Vec& xi);

// Number of points of xi_M + X_*(M) in the closed hull.
long count_hull_points(const PositiveOrthogonalFamily& f, const Vec& xi, Backend backend);

// Sum of term(i) over i in [0, count), reduced in index order so both backends agree exactly.
Q sum_terms(std::uint64_t count, const std::function<Q(std::uint64_t)>& term, Backend backend);

int kernel_threads();

}  // namespace hitchin
