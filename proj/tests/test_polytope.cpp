#include "support.hpp"

#include "hitchin/generators.hpp"

#include "doctest.h"

using namespace hitchin;
using test::par;
using test::segment;
using test::vec;

TEST_CASE("validate_family examples")
{
  auto f = segment(3);
  auto c = validate_family(f);
  REQUIRE(c.size() == 2);
  CHECK(c.at({par("1|2", 2), par("2|1", 2)}) == 3);
  for (const auto& [pair, x] : validate_family(segment(0, 5)))
    CHECK(x == 0);
  CHECK_THROWS_AS(validate_family(segment(-1)), std::invalid_argument);
}

TEST_CASE("family construction rejects malformed input")
{
  std::map<Parabolic, Vec> pts{{par("1|2", 2), vec({"1", "-1"})}};
  CHECK_THROWS_AS(PositiveOrthogonalFamily(make_group(2), Levi::torus(2), pts), std::invalid_argument);
  pts[par("2|1", 2)] = vec({"0", "0", "0"});
  CHECK_THROWS_AS(PositiveOrthogonalFamily(make_group(2), Levi::torus(2), pts), std::invalid_argument);
}

TEST_CASE("family_point_for is independent of the refinement")
{
  Rng rng(23);
  for (int k = 0; k < 20; ++k) {
    auto f = random_family(rng, 3, Levi::torus(3));
    CHECK(is_zero(family_point_for(f, Parabolic::whole(3))));
    for (const auto& q : maximal_parabolics(Levi::torus(3))) {
      Vec y = family_point_for(f, q);
      for (const auto& p : minimal_parabolics(Levi::torus(3)))
        if (p.contained_in(q))
          CHECK(project(f.point(p), q, Part::onto_aP) == y);
    }
  }
}

TEST_CASE("segment family: C_m, hull and HN point")
{
  auto f = segment(3);
  CHECK(cm_member(f, vec({"3/2", "-3/2"}), false, CmMode::all_F));
  CHECK(cm_member(f, vec({"3", "-3"}), true, CmMode::all_F));
  CHECK_FALSE(cm_member(f, vec({"3", "-3"}), false, CmMode::all_F));
  CHECK(hull_member(f, vec({"3/2", "-3/2"})));
  CHECK_FALSE(hull_member(f, vec({"4", "-4"})));

  auto h = hn_point(f, vec({"5", "-5"}));
  CHECK(h.rho == vec({"3", "-3"}));
  CHECK(h.q == par("1|2", 2));
  CHECK(h.dist2 == 8);
  auto hb = hn_point(f, vec({"-2", "2"}));
  CHECK(hb.rho == vec({"0", "0"}));
  CHECK(hb.q == par("2|1", 2));
  CHECK(hb.dist2 == 8);
  auto hi = hn_point(f, vec({"1", "-1"}));
  CHECK(hi.q.is_whole());
  CHECK(hi.dist2 == 0);
}

TEST_CASE("M = G: C_m is everything and xi is its own HN point")
{
  Rng rng(2);
  for (int n = 2; n <= 4; ++n) {
    PositiveOrthogonalFamily f(make_group(n), Levi::whole(n), {{Parabolic::whole(n), zero_vec(n)}});
    for (int k = 0; k < 10; ++k) {
      Vec xi = random_vector(rng, n, 5, 3);
      CHECK(cm_member(f, xi, false, CmMode::all_F));
      CHECK(hull_member(f, xi));
      auto h = hn_point(f, xi);
      CHECK(h.rho == xi);
      CHECK(h.q.is_whole());
      CHECK(h.dist2 == 0);
    }
  }
}

TEST_CASE("hull membership against a planar convex hull oracle")
{
  Rng rng(29);
  for (int k = 0; k < 30; ++k) {
    auto f = random_family(rng, 3, Levi::torus(3), FamilyShape{3, 3, 2, true, false});
    const auto& p0 = f.reference_parabolic();
    for (int j = 0; j < 40; ++j) {
      Vec x = random_point_near(rng, f, Q(1));
      Vec c = *coroot_coordinates(project_levi(x, Levi::torus(3)), p0);
      CHECK(hull_member(f, x) == test::in_planar_hull(f.vertex_coordinates(), c));
    }
    for (const auto& [p, y] : f.points())
      CHECK(hull_member(f, y));
  }
}

TEST_CASE("degenerate families")
{
  Rng rng(31);
  for (int n = 2; n <= 4; ++n) {
    Levi t = Levi::torus(n);
    auto f = random_family(rng, n, t, FamilyShape{0, 0, 1, true, true});
    Vec y = f.points().begin()->second;
    CHECK(f.vertex_coordinates().size() == 1);
    CHECK(hull_member(f, y));
    CHECK_FALSE(hull_member(f, add(y, root_bases(f.reference_parabolic()).coroots[0])));
    CHECK(cm_member(f, y, true, CmMode::only_P));
    CHECK_FALSE(cm_member(f, y, false, CmMode::only_P));
  }
}

TEST_CASE("translation moves the hull")
{
  Rng rng(37);
  for (int k = 0; k < 20; ++k) {
    int n = 2 + k % 3;
    Levi m = random_levi(rng, n);
    auto f = random_family(rng, n, m);
    Vec s = project_levi(random_vector(rng, n, 3, 2), m);
    auto g = f.translated(s);
    for (int j = 0; j < 20; ++j) {
      Vec x = random_point_near(rng, f, Q(1));
      CHECK(hull_member(f, x) == hull_member(g, add(x, s)));
    }
  }
}

TEST_CASE("Langlands indicator examples")
{
  auto f = segment(3);
  Rng rng(41);
  for (int k = 0; k < 10; ++k) {
    auto d = random_generic_direction(rng, Levi::torus(2));
    CHECK(langlands_indicator(f, vec({"1", "-1"}), d) == 1);
    CHECK(langlands_indicator(f, vec({"3", "-3"}), d) == 1);
    CHECK(langlands_indicator(f, vec({"7", "-7"}), d) == 0);
    CHECK(langlands_indicator(f, vec({"-1/2", "1/2"}), d) == 0);
  }
  CHECK_THROWS_AS(langlands_indicator(f, vec({"1", "-1"}), Covector{vec({"0", "0"})}), std::invalid_argument);
}

TEST_CASE("HN conditions on random families")
{
  Rng rng(43);
  for (int k = 0; k < 40; ++k) {
    int n = 2 + k % 3;
    Levi m = random_levi(rng, n);
    auto f = random_family(rng, n, m);
    Vec xi = random_point_near(rng, f, Q(4));
    auto h = hn_point(f, xi);
    Vec d = sub(xi, h.rho);
    CHECK(hull_member(f, h.rho));
    CHECK(is_zero(project(d, h.q, Part::onto_aTP)));
    CHECK(cone_member(h.q, d, ConeKind::acute));
    CHECK(norm2(d) == h.dist2);
    for (int j = 0; j < 30; ++j)
      CHECK(norm2(sub(xi, random_hull_point(rng, f))) >= norm2(sub(project_levi(xi, m), project_levi(h.rho, m))));
  }
}
