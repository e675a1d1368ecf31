#include "hitchin/hull_volume.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace hitchin {

namespace {

int affine_rank(const std::vector<Vec>& pts)
{
  Mat diffs;
  for (std::size_t i = 1; i < pts.size(); ++i)
    diffs.push_back(sub(pts[i], pts[0]));
  return diffs.empty() ? 0 : rank(diffs);
}

void combinations(int n, int k, std::vector<int>& cur, int start, const std::function<void()>& fn);

}  // namespace

Q convex_hull_volume(const std::vector<Vec>& raw, int d)
{
  if (raw.empty())
    throw std::invalid_argument("convex_hull_volume: no points");
  for (const auto& p : raw)
    if (static_cast<int>(p.size()) != d)
      throw std::invalid_argument("convex_hull_volume: dimension mismatch");
  if (d == 0)
    return 1;
  std::set<Vec> uniq(raw.begin(), raw.end());
  std::vector<Vec> pts(uniq.begin(), uniq.end());
  if (affine_rank(pts) < d)
    return 0;
  if (d == 1) {
    Q lo = pts[0][0], hi = pts[0][0];
    for (const auto& p : pts) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    return hi - lo;
  }
  // Facets keyed by outward normal normalised to a leading coefficient of +-1.
  std::map<Vec, std::pair<Q, std::vector<int>>> facets;
  int n = static_cast<int>(pts.size());
  std::vector<int> cur;
  combinations(n, d, cur, 0, [&]() {
    Mat diffs;
    for (int i = 1; i < d; ++i)
      diffs.push_back(sub(pts[cur[i]], pts[cur[0]]));
    if (rank(diffs) != d - 1)
      return;
    Vec normal = nullspace(diffs).front();
    Q off = dot(normal, pts[cur[0]]);
    int pos = 0, negc = 0;
    for (const auto& p : pts) {
      Q s = dot(normal, p) - off;
      if (s > 0)
        ++pos;
      else if (s < 0)
        ++negc;
    }
    if (pos && negc)
      return;
    if (pos) {
      normal = neg(normal);
      off = -off;
    }
    Q lead;
    for (const auto& x : normal)
      if (x != 0) {
        lead = x < 0 ? Q(-x) : x;
        break;
      }
    normal = scale(1 / lead, normal);
    off /= lead;
    if (facets.count(normal))
      return;
    std::vector<int> on;
    for (int i = 0; i < n; ++i)
      if (dot(normal, pts[i]) == off)
        on.push_back(i);
    facets.emplace(normal, std::make_pair(off, on));
  });
  const Vec& apex = pts[0];
  Q total = 0;
  for (const auto& [normal, rec] : facets) {
    const auto& [off, on] = rec;
    if (dot(normal, apex) == off)
      continue;
    const Vec& p0 = pts[on[0]];
    Mat w = nullspace({normal});
    std::vector<Vec> local;
    for (int i : on)
      local.push_back(*solve_rows(w, sub(pts[i], p0)));
    Q face = convex_hull_volume(local, d - 1);
    Mat m = w;
    m.push_back(sub(apex, p0));
    Q j = det(m);
    if (j < 0)
      j = -j;
    total += face * j / d;
  }
  return total;
}

namespace {

void combinations(int n, int k, std::vector<int>& cur, int start, const std::function<void()>& fn)
{
  if (static_cast<int>(cur.size()) == k) {
    fn();
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, cur, i + 1, fn);
    cur.pop_back();
  }
}

}  // namespace

}  // namespace hitchin
