#include "hitchin/linalg.hpp"

#include <stdexcept>

namespace hitchin {

Mat transpose(const Mat& a)
{
  if (a.empty())
    return {};
  Mat t(a[0].size(), Vec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      t[j][i] = a[i][j];
  return t;
}

Mat mat_mul(const Mat& a, const Mat& b)
{
  if (a.empty())
    return {};
  std::size_t inner = b.size();
  if (a[0].size() != inner)
    throw std::invalid_argument("mat_mul: shape mismatch");
  std::size_t cols = inner ? b[0].size() : 0;
  Mat r(a.size(), Vec(cols, Q(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0)
        continue;
      for (std::size_t j = 0; j < cols; ++j)
        r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Mat& a)
{
  std::vector<int> pivots;
  if (a.empty())
    return pivots;
  std::size_t rows = a.size(), cols = a[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0)
      ++p;
    if (p == rows)
      continue;
    std::swap(a[p], a[r]);
    Q inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j)
      a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0)
        continue;
      Q f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        a[i][j] -= f * a[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(Mat a) { return static_cast<int>(rref(a).size()); }

Q det(Mat a)
{
  std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n)
      throw std::invalid_argument("det: not square");
  Q d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0)
        continue;
      Q f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j)
        a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

std::optional<Mat> inverse(Mat a)
{
  std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n)
      throw std::invalid_argument("inverse: not square");
    a[i].resize(2 * n, Q(0));
    a[i][n + i] = 1;
  }
  auto piv = rref(a);
  if (piv.size() < n || (n && piv[n - 1] != static_cast<int>(n - 1)))
    return std::nullopt;
  Mat r(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r[i][j] = a[i][n + j];
  return r;
}

std::optional<Vec> solve_rows(const Mat& rows, const Vec& b)
{
  // Columns of the augmented system are the given rows.
  std::size_t k = rows.size(), n = b.size();
  Mat a(n, Vec(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (rows[j].size() != n)
        throw std::invalid_argument("solve_rows: size mismatch");
      a[i][j] = rows[j][i];
    }
    a[i][k] = b[i];
  }
  auto piv = rref(a);
  if (!piv.empty() && piv.back() == static_cast<int>(k))
    return std::nullopt;
  Vec x(k, Q(0));
  for (std::size_t r = 0; r < piv.size(); ++r)
    x[piv[r]] = a[r][k];
  return x;
}

Mat nullspace(const Mat& a)
{
  if (a.empty())
    return {};
  std::size_t cols = a[0].size();
  Mat m = a;
  auto piv = rref(m);
  std::vector<bool> is_piv(cols, false);
  for (int p : piv)
    is_piv[p] = true;
  Mat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f])
      continue;
    Vec v(cols, Q(0));
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r)
      v[piv[r]] = -m[r][f];
    basis.push_back(v);
  }
  return basis;
}

std::vector<int> independent_rows(const Mat& rows)
{
  std::vector<int> keep;
  Mat acc;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    acc.push_back(rows[i]);
    if (rank(acc) == static_cast<int>(acc.size()))
      keep.push_back(static_cast<int>(i));
    else
      acc.pop_back();
  }
  return keep;
}

}  // namespace hitchin
