#pragma once

#include "hitchin/polytope.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace test {

inline hitchin::Vec vec(std::initializer_list<const char*> xs)
{
  std::vector<std::string> s(xs.begin(), xs.end());
  return hitchin::parse_vec(s);
}

inline hitchin::Parabolic par(const std::string& key, int n) { return hitchin::Parabolic::from_key(key, n); }

// n = 2 family over T with Y_B = x (1,-1) + shift and Y_Bbar = shift.
inline hitchin::PositiveOrthogonalFamily segment(const hitchin::Q& x, const hitchin::Q& shift = 0)
{
  using namespace hitchin;
  std::map<Parabolic, Vec> pts;
  pts[par("1|2", 2)] = {x + shift, -x - shift};
  pts[par("2|1", 2)] = {shift, -shift};
  return PositiveOrthogonalFamily(make_group(2), Levi::torus(2), pts);
}

inline hitchin::Q cross(const hitchin::Vec& o, const hitchin::Vec& a, const hitchin::Vec& b)
{
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Counterclockwise hull vertices by Andrew's monotone chain.
inline std::vector<hitchin::Vec> planar_hull(std::vector<hitchin::Vec> pts)
{
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3)
    return pts;
  std::vector<hitchin::Vec> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0)
      --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i - 1]) <= 0)
      --k;
    h[k++] = pts[i - 1];
  }
  h.resize(k - 1);
  return h;
}

inline hitchin::Q shoelace(const std::vector<hitchin::Vec>& h)
{
  hitchin::Q a = 0;
  for (std::size_t i = 0; i < h.size(); ++i)
    a += h[i][0] * h[(i + 1) % h.size()][1] - h[(i + 1) % h.size()][0] * h[i][1];
  return h.size() < 3 ? hitchin::Q(0) : hitchin::Q(a / 2);
}

inline bool in_planar_hull(const std::vector<hitchin::Vec>& pts, const hitchin::Vec& x)
{
  auto h = planar_hull(pts);
  if (h.size() <= 2) {
    const hitchin::Vec& a = h[0];
    const hitchin::Vec& b = h.back();
    if (cross(a, b, x) != 0)
      return false;
    return std::min(a[0], b[0]) <= x[0] && x[0] <= std::max(a[0], b[0]) && std::min(a[1], b[1]) <= x[1] &&
           x[1] <= std::max(a[1], b[1]);
  }
  for (std::size_t i = 0; i < h.size(); ++i)
    if (cross(h[i], h[(i + 1) % h.size()], x) < 0)
      return false;
  return true;
}

}  // namespace test
