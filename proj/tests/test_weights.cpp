#include "support.hpp"

#include "hitchin/generators.hpp"
#include "hitchin/weights.hpp"

#include "doctest.h"

using namespace hitchin;
using test::par;
using test::segment;
using test::vec;

namespace {

NormalizedScalar scnx_volume(const Levi& m) { return NormalizedScalar::volume_of(cochar_lattice(m, LatticeKind::scnx)); }

// Points of xi + X_*(T) in the hull, n = 3, by box enumeration and the planar oracle.
long planar_count(const PositiveOrthogonalFamily& f, const Vec& xi)
{
  const auto& p0 = f.reference_parabolic();
  Vec c0 = *coroot_coordinates(xi, p0);
  long count = 0;
  // X_*(T) in coroot coordinates of any Borel is Z^2.
  for (long a = -40; a <= 40; ++a)
    for (long b = -40; b <= 40; ++b) {
      Vec c{c0[0] + a, c0[1] + b};
      count += test::in_planar_hull(f.vertex_coordinates(), c);
    }
  return count;
}

}  // namespace

TEST_CASE("integer parts in each coroot basis")
{
  auto b = par("1|2", 2), bb = par("2|1", 2);
  auto half = vec({"1/2", "-1/2"});
  auto fb = floor_decompose(half, b);
  CHECK(is_zero(fb.integral));
  CHECK(fb.fractional == half);
  auto fbb = floor_decompose(half, bb);
  CHECK(fbb.integral == vec({"1", "-1"}));
  CHECK(fbb.fractional == vec({"-1/2", "1/2"}));
  auto one = vec({"1", "-1"});
  CHECK(floor_decompose(one, b).integral == one);
  CHECK(is_zero(floor_decompose(one, b, IntegerPart::upper).integral));
  CHECK(floor_decompose(one, b, IntegerPart::upper).fractional == one);
  Rng rng(61);
  for (int k = 0; k < 50; ++k) {
    int n = 2 + k % 3;
    Vec mu = random_vector(rng, n, 4, 5);
    for (const auto& p : minimal_parabolics(Levi::torus(n)))
      for (auto conv : {IntegerPart::floor, IntegerPart::upper}) {
        auto d = floor_decompose(mu, p, conv);
        CHECK(add(d.integral, d.fractional) == mu);
        CHECK(cochar_lattice(Levi::torus(n), LatticeKind::scnx).contains(d.integral));
        Vec frac = *coroot_coordinates(d.fractional, p);
        for (const auto& c : frac)
          CHECK((conv == IntegerPart::floor ? (c >= 0 && c < 1) : (c > 0 && c <= 1)));
      }
  }
}

TEST_CASE("w weight of the segment family")
{
  auto f = segment(3);
  for (auto m : {Method::direct, Method::limit}) {
    CHECK(w_weight(f, vec({"1/2", "-1/2"}), m) == 3);
    CHECK(w_weight(f, vec({"0", "0"}), m) == 4);
  }
  auto t = trivial_family(make_group(2), Levi::torus(2));
  CHECK(w_weight(t, vec({"0", "0"}), Method::direct) == 1);
  CHECK(w_weight(t, vec({"1/2", "-1/2"}), Method::direct) == 0);
  CHECK(w_weight(t, vec({"1/2", "-1/2"}), Method::limit) == 0);
}

TEST_CASE("v weight of the segment family")
{
  auto f = segment(3);
  auto expected = NormalizedScalar(3) * scnx_volume(Levi::torus(2));
  CHECK(v_weight(f, Method::direct).equals(expected));
  CHECK(v_weight(f, Method::limit).equals(expected));
  CHECK(v_weight(segment(0, 2), Method::direct).equals(NormalizedScalar(0)));
  CHECK(v_weight(segment(0, 2), Method::limit).equals(NormalizedScalar(0)));
}

TEST_CASE("w and v on planar families against oracles")
{
  Rng rng(67);
  Levi t = Levi::torus(3);
  for (int k = 0; k < 12; ++k) {
    auto f = random_family(rng, 3, t);
    for (int j = 0; j < 2; ++j) {
      Vec xi = j == 0 ? zero_vec(3) : random_general_xi(rng, 3);
      long oracle = planar_count(f, xi);
      CHECK(w_weight(f, xi, Method::direct) == oracle);
      CHECK(w_weight(f, xi, Method::limit) == oracle);
    }
    auto v = NormalizedScalar(test::shoelace(test::planar_hull(f.vertex_coordinates()))) * scnx_volume(t);
    CHECK(v_weight(f, Method::direct).equals(v));
    CHECK(v_weight(f, Method::limit).equals(v));
  }
}

TEST_CASE("constant and trivial families")
{
  for (const auto& m : {Levi::torus(2), Levi(3, {{0, 1}, {2}}), Levi::torus(3)}) {
    auto dirs = generic_directions(m, 3);
    auto g = make_group(m.n());
    CHECK(family_limit(constant_family(g, m, 1), dirs).equals(NormalizedScalar(0)));
    CHECK(family_limit(v_family(trivial_family(g, m)), dirs).equals(NormalizedScalar(0)));
  }
  auto g = make_group(3);
  Levi whole = Levi::whole(3);
  CHECK(family_limit(constant_family(g, whole, Q(5, 2)), generic_directions(whole, 3)).equals(NormalizedScalar(Q(5, 2))));
}

TEST_CASE("v family members")
{
  auto f = segment(3);
  auto fam = v_family(f);
  Covector l{vec({"1/2", "-1/2"})};
  CHECK(l(vec({"1", "-1"})) == 1);
  CHECK(fam.member(par("1|2", 2), l, 6).agrees_with(SeriesQ::exp_linear(3, 6)));
  CHECK(fam.member(par("2|1", 2), l, 6).agrees_with(SeriesQ::constant(1, 6)));
}

TEST_CASE("families agree on every wall")
{
  Rng rng(71);
  for (int k = 0; k < 6; ++k) {
    Levi m = k % 2 ? Levi::torus(3) : random_levi(rng, 4);
    int n = m.n();
    auto f = random_family(rng, n, m);
    auto fams = {v_family(f), w_family(project_levi(random_general_xi(rng, n), m), make_group(n), m)};
    auto d = generic_directions(m, 1).front();
    for (const auto& fam : fams)
      for (const auto& p : minimal_parabolics(m))
        for (const auto& pp : minimal_parabolics(m))
          if (adjacent(p, pp))
            CHECK(wall_agreement(fam, p, pp, d));
  }
}

TEST_CASE("limits do not depend on the directions")
{
  Rng rng(73);
  for (int k = 0; k < 8; ++k) {
    int n = 2 + k % 3;
    Levi m = random_levi(rng, n);
    auto f = random_family(rng, n, m);
    auto a = family_limit(v_family(f), generic_directions(m, 3, 1));
    auto b = family_limit(v_family(f), generic_directions(m, 3, 99));
    CHECK(a.equals(b));
  }
}

TEST_CASE("restriction to Levi subgroups")
{
  Rng rng(79);
  auto f = random_family(rng, 3, Levi::torus(3));
  auto same = restrict_family(f, Levi::torus(3));
  CHECK(same.points() == f.points());
  auto top = restrict_family(f, Levi::whole(3));
  CHECK(top.points().size() == 1);
  Levi l(3, {{0, 1}, {2}});
  auto r = restrict_family(f, l);
  for (const auto& [q, y] : r.points())
    CHECK(y == family_point_for(f, q));
  auto dirs = generic_directions(l, 3);
  auto restricted = restrict_family(v_family(f), l);
  CHECK(family_limit(restricted, dirs).equals(v_weight(r, Method::direct)));
}

TEST_CASE("translation invariance")
{
  Rng rng(83);
  for (int k = 0; k < 15; ++k) {
    int n = 2 + k % 3;
    Levi m = random_levi(rng, n);
    auto f = random_family(rng, n, m);
    Vec xi = random_general_xi(rng, n);
    Vec lambda = project_levi(integral_vector(rng, n, 3), m);
    CHECK(w_weight(f.translated(lambda), xi, Method::direct) == w_weight(f, xi, Method::direct));
    Vec any = project_levi(random_vector(rng, n, 3, 5), m);
    CHECK(v_weight(f.translated(any), Method::direct).equals(v_weight(f, Method::direct)));
  }
}

TEST_CASE("coset sums and the reformulation")
{
  auto f = segment(3);
  auto reps = coset_reps(Levi::torus(2));
  auto r1 = reformulation_check(f, vec({"1/2", "-1/2"}), reps);
  CHECK(r1.holds);
  CHECK(r1.rhs == 3);
  auto r0 = reformulation_check(f, vec({"0", "0"}), reps);
  CHECK(r0.holds);
  CHECK(r0.rhs == 4);
  auto t = trivial_family(make_group(2), Levi::torus(2));
  auto rt = reformulation_check(t, vec({"0", "0"}), reps);
  CHECK(rt.lhs == 1);

  for (int n = 2; n <= 3; ++n) {
    auto g = make_group(n);
    Vec xi = n == 2 ? vec({"1/3", "-1/3"}) : vec({"1/3", "1/3", "-2/3"});
    auto top = wl_sum_identity(g, Levi::torus(n), Levi::whole(n), xi, coset_reps(Levi::torus(n)));
    CHECK(top.holds);
    NormalizedScalar one(Q(1), {VolumeFactor{cochar_lattice(Levi::whole(n), LatticeKind::full), 1},
                                VolumeFactor{cochar_lattice(Levi::torus(n), LatticeKind::full), -1}});
    CHECK(top.rhs.equals(one.canonical()));
    for (bool shifted : {false, true}) {
      auto reps_n = coset_reps(Levi::torus(n), shifted);
      for (const auto& l : levis_containing(Levi::torus(n)))
        CHECK(wl_sum_identity(g, Levi::torus(n), l, xi, reps_n).holds);
    }
  }
}

TEST_CASE("generic directions are generic and reproducible")
{
  for (int n = 2; n <= 4; ++n)
    for (const auto& m : enumerate_levis(make_group(n))) {
      auto a = generic_directions(m, 4, 5);
      CHECK(a == generic_directions(m, 4, 5));
      for (const auto& d : a)
        CHECK(is_generic_direction(m, d));
    }
}
