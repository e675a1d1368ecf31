#pragma once

#include "hitchin/polytope.hpp"

#include <cstdint>
#include <random>

namespace hitchin {

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi]; avoids std distributions so streams match across standard libraries.
long uniform(Rng& rng, long lo, long hi);
Q random_rational(Rng& rng, long num_bound, long max_den);

Levi random_levi(Rng& rng, int n);

struct FamilyShape {
  int simplices = 3;     // number of simplex summands
  long weight_num = 3;   // y_I = a/b with 0 <= a <= weight_num
  long weight_den = 2;   // 1 <= b <= weight_den
  bool translate = true; // random translation
  // Integer weights and translation, so every Y_P lies in X_*(M) as for Iwasawa heights.
  bool integral = true;
};

// Positive orthogonal family over T built as a Minkowski sum of coordinate simplices, then restricted to m.
PositiveOrthogonalFamily random_family(Rng& rng, int n, const Levi& m, const FamilyShape& shape = {});

// Trace-zero vector with every proper subset sum non-integral.
Vec random_general_xi(Rng& rng, int n);
// Element of X_*(T) with coordinates bounded by `bound` (last one absorbs the trace).
Vec integral_vector(Rng& rng, int n, long bound);
Vec random_vector(Rng& rng, int n, long num_bound, long max_den);
// Random rational point of a_M inside the bounding box of the hull, widened by `margin`.
Vec random_point_near(Rng& rng, const PositiveOrthogonalFamily& f, const Q& margin);
// Random convex combination of the vertices.
Vec random_hull_point(Rng& rng, const PositiveOrthogonalFamily& f);
Covector random_generic_direction(Rng& rng, const Levi& m);

}  // namespace hitchin
