#include "support.hpp"

#include "hitchin/generators.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>

using namespace hitchin;
using test::par;
using test::vec;

namespace {

long bell(int n)
{
  std::vector<std::vector<long>> tri{{1}};
  for (int i = 1; i < n; ++i) {
    std::vector<long> row{tri.back().back()};
    for (long x : tri.back())
      row.push_back(row.back() + x);
    tri.push_back(row);
  }
  return tri.back().back();
}

long fubini(int n)
{
  std::vector<long> a{1};
  for (int m = 1; m <= n; ++m) {
    long s = 0, binom = 1;
    for (int k = 1; k <= m; ++k) {
      binom = binom * (m - k + 1) / k;
      s += binom * a[m - k];
    }
    a.push_back(s);
  }
  return a[n];
}

// Blocks ordered by decreasing coordinate value.
std::string chamber_by_sorting(const Vec& v)
{
  std::vector<Q> values(v.begin(), v.end());
  std::sort(values.begin(), values.end(), std::greater<>());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::string key;
  for (const auto& x : values) {
    if (!key.empty())
      key += "|";
    std::string block;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] == x)
        block += (block.empty() ? "" : ",") + std::to_string(i + 1);
    key += block;
  }
  return key;
}

}  // namespace

TEST_CASE("Levi and parabolic counts")
{
  for (int n = 2; n <= 5; ++n) {
    auto g = make_group(n);
    CHECK(static_cast<long>(enumerate_levis(g).size()) == bell(n));
    long fact = 1;
    for (int i = 2; i <= n; ++i)
      fact *= i;
    CHECK(static_cast<long>(minimal_parabolics(Levi::torus(n)).size()) == fact);
    CHECK(static_cast<long>(parabolics_containing(Levi::torus(n)).size()) == fubini(n));
    CHECK(minimal_parabolics(Levi::whole(n)).size() == 1);
  }
}

TEST_CASE("weights are dual to coroots and shrink along inclusion")
{
  for (int n = 2; n <= 4; ++n)
    for (const auto& p : parabolics_containing(Levi::torus(n))) {
      auto rb = root_bases(p);
      REQUIRE(rb.weights.size() == rb.coroots.size());
      for (std::size_t i = 0; i < rb.weights.size(); ++i)
        for (std::size_t j = 0; j < rb.coroots.size(); ++j)
          CHECK(rb.weights[i](rb.coroots[j]) == Q(i == j ? 1 : 0));
      for (const auto& q : parabolics_containing(Levi::torus(n))) {
        if (!p.contained_in(q))
          continue;
        for (const auto& w : root_bases(q).weights)
          CHECK(std::find(rb.weights.begin(), rb.weights.end(), w) != rb.weights.end());
      }
    }
}

TEST_CASE("coroot of the maximal parabolic of SL(3)")
{
  auto rb = root_bases(par("1,2|3", 3));
  REQUIRE(rb.coroots.size() == 1);
  CHECK(rb.coroots[0] == vec({"1/2", "1/2", "-1"}));
  CHECK(coroot_coordinates(vec({"1", "1", "-2"}), par("1,2|3", 3)) == std::optional<Vec>(vec({"2"})));
  CHECK_FALSE(coroot_coordinates(vec({"1", "0", "-1"}), par("1,2|3", 3)).has_value());
}

TEST_CASE("projections are idempotent and orthogonal")
{
  Rng rng(11);
  for (int n = 2; n <= 4; ++n)
    for (const auto& p : parabolics_containing(Levi::torus(n))) {
      Vec v = random_vector(rng, n, 5, 4);
      Vec vp = project(v, p, Part::onto_aP);
      Vec rest = project(v, p, Part::onto_aTP);
      CHECK(add(vp, rest) == v);
      CHECK(project(vp, p, Part::onto_aP) == vp);
      Vec w = project(random_vector(rng, n, 5, 4), p, Part::onto_aP);
      CHECK(dot(rest, w) == 0);
      CHECK(in_a_levi(vp, p.levi()));
    }
}

TEST_CASE("cone membership examples")
{
  auto b = par("1|2", 2);
  for (auto kind : {ConeKind::obtuse_open, ConeKind::obtuse_closed, ConeKind::acute})
    CHECK(cone_member(b, vec({"1", "-1"}), kind));
  CHECK(cone_member(b, vec({"0", "0"}), ConeKind::obtuse_closed));
  CHECK_FALSE(cone_member(b, vec({"0", "0"}), ConeKind::obtuse_open));
  auto p = par("1,2|3", 3);
  CHECK(cone_member(p, project(vec({"1", "1", "-2"}), p, Part::onto_aP), ConeKind::acute));
  CHECK_THROWS_AS(cone_member(p, vec({"1", "0", "-1"}), ConeKind::acute), std::invalid_argument);
}

TEST_CASE("chambers partition the ambient space")
{
  Rng rng(5);
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k < 200; ++k) {
      Vec v = random_vector(rng, n, 2, 1);
      CHECK(chamber_partition_check(make_group(n), v).key() == chamber_by_sorting(v));
    }
  CHECK(chamber_partition_check(make_group(3), vec({"0", "0", "0"})).is_whole());
}

TEST_CASE("adjacency")
{
  CHECK(adjacent(par("1|2|3", 3), par("2|1|3", 3)));
  CHECK(adjacent(par("1,2|3", 3), par("3|1,2", 3)));
  CHECK_FALSE(adjacent(par("1|2|3", 3), par("3|2|1", 3)));
  CHECK_FALSE(adjacent(par("1|2|3|4", 4), par("2|4|3|1", 4)));
  CHECK(adjacency_coroot(par("1|2", 2), par("2|1", 2)) == std::optional<Vec>(vec({"1", "-1"})));
}

TEST_CASE("cocharacter lattices")
{
  for (int n = 2; n <= 4; ++n)
    for (const auto& m : enumerate_levis(make_group(n))) {
      auto full = cochar_lattice(m, LatticeKind::full);
      auto sc = cochar_lattice(m, LatticeKind::scnx);
      CHECK(full.rank() == m.dim());
      CHECK(full.contains(sc));
      // Projections of e_i - e_j are sums of consecutive coroots, so the index is 1.
      CHECK(lattice_index(full, sc) == 1);
    }
}

TEST_CASE("general position")
{
  auto g2 = make_group(2), g3 = make_group(3);
  CHECK(is_general_position(vec({"1/3", "-1/3"}), g2));
  CHECK_FALSE(is_general_position(vec({"1", "-1"}), g2));
  CHECK(is_general_position(vec({"1/3", "1/3", "-2/3"}), g3));
  CHECK_FALSE(is_general_position(vec({"1/2", "1/2", "-1"}), g3));
  Rng rng(3);
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k < 200; ++k) {
      Vec xi = random_vector(rng, n, 3, 4);
      CHECK(is_general_position(xi, make_group(n)) == general_position_by_subsets(xi));
    }
}

TEST_CASE("ambient space")
{
  CHECK(to_ambient(vec({"3", "1", "2"})) == vec({"1", "-1", "0"}));
  CHECK(in_ambient(vec({"1/2", "-1/2"}), make_group(2)));
  CHECK_FALSE(in_ambient(vec({"1", "0"}), make_group(2)));
  CHECK_THROWS(Levi(3, {{0, 1}}));
  CHECK_THROWS(Parabolic::from_key("1|1,2", 2));
}
