#include "hitchin/lp.hpp"

#include <stdexcept>

namespace hitchin {

std::optional<Vec> lp_feasible(const Mat& a, const Vec& b)
{
  std::size_t m = a.size();
  if (b.size() != m)
    throw std::invalid_argument("lp_feasible: shape mismatch");
  std::size_t n = m ? a[0].size() : 0;
  // Tableau columns: n structural, m artificial, rhs.
  std::size_t cols = n + m + 1;
  Mat t(m, Vec(cols, Q(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    Q sign = b[i] < 0 ? Q(-1) : Q(1);
    for (std::size_t j = 0; j < n; ++j)
      t[i][j] = sign * a[i][j];
    t[i][n + i] = 1;
    t[i][cols - 1] = sign * b[i];
    basis[i] = n + i;
  }
  // Reduced costs of the phase-one objective (sum of artificials).
  Vec cost(cols, Q(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (j < n || j == cols - 1)
        cost[j] -= t[i][j];

  for (;;) {
    // Bland's rule: smallest index with negative reduced cost.
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols)
      break;
    std::size_t leave = m;
    Q best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0)
        continue;
      Q ratio = t[i][cols - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m)
      break;  // unbounded direction cannot occur in phase one
    Q piv = t[leave][enter];
    for (auto& x : t[leave])
      x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0)
        continue;
      Q f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j)
        t[i][j] -= f * t[leave][j];
    }
    Q f = cost[enter];
    for (std::size_t j = 0; j < cols; ++j)
      cost[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  if (cost[cols - 1] != 0)
    return std::nullopt;
  Vec x(n, Q(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n)
      x[basis[i]] = t[i][cols - 1];
  return x;
}

}  // namespace hitchin
