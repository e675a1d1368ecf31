#include "support.hpp"

#include "hitchin/generators.hpp"
#include "hitchin/hull_volume.hpp"

#include "doctest.h"

using namespace hitchin;
using test::vec;

namespace {

Vec random_point(Rng& rng, int d, long bound, long den)
{
  Vec v(d);
  for (auto& x : v)
    x = random_rational(rng, bound, den);
  return v;
}

}  // namespace

TEST_CASE("segments, squares and cubes")
{
  CHECK(convex_hull_volume({vec({"3"}), vec({"-1/2"}), vec({"1"})}, 1) == Q(7, 2));
  CHECK(convex_hull_volume({vec({"0", "0"}), vec({"2", "0"}), vec({"0", "3"}), vec({"2", "3"}), vec({"1", "1"})}, 2) ==
        6);
  std::vector<Vec> cube;
  for (int m = 0; m < 8; ++m)
    cube.push_back({Q(m & 1), Q((m >> 1) & 1), Q((m >> 2) & 1)});
  cube.push_back(vec({"1/2", "1/3", "1/4"}));
  CHECK(convex_hull_volume(cube, 3) == 1);
}

TEST_CASE("degenerate hulls have zero volume")
{
  CHECK(convex_hull_volume({vec({"1", "1"})}, 2) == 0);
  CHECK(convex_hull_volume({vec({"0", "0"}), vec({"1", "1"}), vec({"2", "2"})}, 2) == 0);
  CHECK(convex_hull_volume({vec({"0", "0", "0"}), vec({"1", "0", "0"}), vec({"0", "1", "0"}), vec({"1", "1", "0"})},
                           3) == 0);
}

TEST_CASE("simplices: |det| / d!")
{
  Rng rng(47);
  for (int d = 1; d <= 4; ++d)
    for (int k = 0; k < 20; ++k) {
      std::vector<Vec> pts;
      for (int i = 0; i <= d; ++i)
        pts.push_back(random_point(rng, d, 5, 3));
      Mat m;
      for (int i = 1; i <= d; ++i)
        m.push_back(sub(pts[i], pts[0]));
      Q fact = 1;
      for (int i = 2; i <= d; ++i)
        fact *= i;
      Q expected = abs(det(m)) / fact;
      CHECK(convex_hull_volume(pts, d) == expected);
    }
}

TEST_CASE("planar hulls against the shoelace formula")
{
  Rng rng(53);
  for (int k = 0; k < 100; ++k) {
    std::vector<Vec> pts;
    int count = static_cast<int>(uniform(rng, 3, 12));
    for (int i = 0; i < count; ++i)
      pts.push_back(random_point(rng, 2, 6, 2));
    CHECK(convex_hull_volume(pts, 2) == test::shoelace(test::planar_hull(pts)));
  }
}

TEST_CASE("volume is translation invariant and homogeneous")
{
  Rng rng(59);
  for (int k = 0; k < 20; ++k) {
    int d = 2 + k % 2;
    std::vector<Vec> pts, moved, scaled;
    Vec s = random_point(rng, d, 4, 3);
    for (int i = 0; i < 8; ++i) {
      pts.push_back(random_point(rng, d, 4, 2));
      moved.push_back(add(pts.back(), s));
      scaled.push_back(scale(Q(3, 2), pts.back()));
    }
    Q v = convex_hull_volume(pts, d);
    CHECK(convex_hull_volume(moved, d) == v);
    Q factor = d == 2 ? Q(9, 4) : Q(27, 8);
    CHECK(convex_hull_volume(scaled, d) == factor * v);
  }
}
