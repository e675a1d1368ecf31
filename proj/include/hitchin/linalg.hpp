#pragma once

#include "hitchin/rational.hpp"

#include <optional>
#include <vector>

namespace hitchin {

// Dense row-major matrix over Q.
using Mat = std::vector<Vec>;

Mat transpose(const Mat& a);
Mat mat_mul(const Mat& a, const Mat& b);
int rank(Mat a);
Q det(Mat a);
std::optional<Mat> inverse(Mat a);

// Solves x * A = b for a row vector x, i.e. b as a combination of the rows of A.
std::optional<Vec> solve_rows(const Mat& rows, const Vec& b);

// Basis of {x : A x = 0}.
Mat nullspace(const Mat& a);

// Indices of a maximal linearly independent subset, greedy in order.
std::vector<int> independent_rows(const Mat& rows);

}  // namespace hitchin
